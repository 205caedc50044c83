#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gentle/linalg.hpp"
#include "gentle/quiver.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// A right module: one space per vertex and, for each arrow a, a matrix of
// shape dim(source) x dim(target) acting on row vectors.
class Representation {
public:
    Representation() = default;
    // Validates shapes and the vanishing of every relation; throws InvalidInput.
    static Representation make(const BoundQuiver& bq, std::vector<int> dims, std::vector<Matrix> maps);
    static Representation zero(const BoundQuiver& bq);

    int vertex_count() const { return static_cast<int>(dims_.size()); }
    int dim(int v) const { return dims_[v]; }
    const std::vector<int>& dims() const { return dims_; }
    const Matrix& map(int arrow) const { return maps_[arrow]; }
    const std::vector<Matrix>& maps() const { return maps_; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

private:
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

struct JordanSpec {
    Scalar eigenvalue = 1;
    int size = 1;
};

Representation string_module(const BoundQuiver& bq, const Word& s);
Representation band_module(const BoundQuiver& bq, const Word& band, const JordanSpec& j);
Representation projective_module(const BoundQuiver& bq, int v);
Representation injective_module(const BoundQuiver& bq, int v);
// The right ideal pA: spanned by the nonzero paths p*q.
Representation path_ideal_module(const BoundQuiver& bq, const NonzeroPath& p);
// D M = Hom_k(M, k), a module over opposite(bq).
Representation dual(const BoundQuiver& bq, const Representation& m);
Representation direct_sum(const BoundQuiver& bq, const Representation& a, const Representation& b);

// Per-vertex matrices f_v of shape dim M_v x dim N_v with M_a f_t = f_s N_a.
struct Homomorphism {
    std::vector<Matrix> maps;
};

bool is_homomorphism(const BoundQuiver& bq, const Representation& m, const Representation& n, const Homomorphism& f);
std::vector<Homomorphism> hom_space(const BoundQuiver& bq, const Representation& m, const Representation& n);

// One-sided random search for an invertible homomorphism, then a lattice
// scan of coefficient vectors in {-2..2}.  Throws Inconclusive when the
// lattice is too large to scan.
bool is_isomorphic(const BoundQuiver& bq, const Representation& m, const Representation& n,
                   std::uint64_t seed = 0x5eedULL);

struct ProjectiveCover {
    std::vector<int> top;  // multiplicity of P(v) in the cover
    Representation cover;
    Homomorphism cover_map;
    Representation kernel;
};
ProjectiveCover projective_cover_and_syzygy(const BoundQuiver& bq, const Representation& m);

struct ResolutionResult {
    bool cap_reached = false;
    int value = 0;  // meaningful when !cap_reached
    std::vector<int> syzygy_dims;  // total dimension of M, Omega M, Omega^2 M, ...
};
ResolutionResult resolve_pd(const BoundQuiver& bq, const Representation& m, int cap = 16);
ResolutionResult resolve_id(const BoundQuiver& bq, const Representation& m, int cap = 16);

// Terms X^low, ..., X^high with differentials d^i : X^i -> X^{i+1}.
class ComplexOfReps {
public:
    // Validates that each differential is a homomorphism and d*d = 0; throws InvalidInput.
    static ComplexOfReps make(const BoundQuiver& bq, int low, std::vector<Representation> terms,
                              std::vector<Homomorphism> differentials);

    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(terms_.size()) - 1; }
    const std::vector<Representation>& terms() const { return terms_; }
    const std::vector<Homomorphism>& differentials() const { return diffs_; }

private:
    int low_ = 0;
    std::vector<Representation> terms_;
    std::vector<Homomorphism> diffs_;
};

struct CohomologyDegree {
    int degree = 0;
    std::vector<int> dims;
    int total = 0;
};
std::vector<CohomologyDegree> cohomology_dims(const BoundQuiver& bq, const ComplexOfReps& x);

}  // namespace gentle
