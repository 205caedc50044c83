#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"
#include "gentle/representation.hpp"

namespace gentle {

// Non-projective indecomposable G-projectives: one right ideal aA per arrow a
// on a forbidden cycle, in cycle order.
struct GprojEntry {
    int arrow = 0;
    Representation module;
    bool nonprojective = false;
};
struct GprojCatalog {
    std::vector<GprojEntry> entries;
};
GprojCatalog gproj_catalog(const BoundQuiver& bq);

struct CmaPresentation {
    BoundQuiver quiver;
    std::vector<int> vertex_origin;    // CMA vertex -> original vertex, or -1
    std::vector<int> vertex_catalog;   // CMA vertex -> catalog index, or -1
    std::vector<int> catalog_arrow;    // catalog index -> original cycle arrow
    std::vector<int> catalog_vertex;   // catalog index -> CMA vertex
    std::vector<int> kept_arrow;       // original arrow -> CMA arrow, or -1 when split
    std::vector<std::pair<int, int>> split_arrow;  // original arrow -> (c^-, c^+), or (-1, -1)

    // The idempotent support of the original vertices.
    std::vector<int> original_vertices() const;
    std::vector<int> catalog_vertices() const { return catalog_vertex; }
};

CmaPresentation build_cma(const BoundQuiver& bq);

// A / AeA where e is the sum of the trivial paths at the deleted vertices.
BoundQuiver quotient_by_idempotent(const BoundQuiver& bq, const std::vector<int>& deleted_vertices);

struct CornerAlgebra {
    std::vector<int> keep;             // retained ambient vertices, ascending
    std::vector<NonzeroPath> basis;    // ambient paths with both ends retained
    std::vector<std::vector<int>> product;  // basis index of b_i * b_j, or -1

    int dimension() const { return static_cast<int>(basis.size()); }
};
CornerAlgebra corner_algebra(const BoundQuiver& bq, std::vector<int> keep);

struct RecoveredPresentation {
    BoundQuiver quiver;
    std::vector<int> vertex_ambient;          // recovered vertex -> ambient vertex
    std::vector<NonzeroPath> generator_path;  // recovered arrow -> ambient path
    GentleVerdict gentle;
};
// Throws InvalidInput when the generators do not present the corner by
// length-2 monomial relations.
RecoveredPresentation recover_gentle_presentation(const BoundQuiver& ambient, const CornerAlgebra& ca);

struct QuiverIsomorphism {
    std::vector<int> vertex_map;  // a-vertex -> b-vertex
    std::vector<int> arrow_map;   // a-arrow -> b-arrow
};
// Exact backtracking search for a bijection preserving endpoints and relations.
std::optional<QuiverIsomorphism> find_isomorphism(const BoundQuiver& a, const BoundQuiver& b);

Representation restrict_module(const BoundQuiver& ambient, const RecoveredPresentation& corner,
                               const Representation& m);
// Relabels a module over `from` as a module over `to` along an isomorphism.
Representation transport(const BoundQuiver& from, const BoundQuiver& to, const QuiverIsomorphism& iso,
                         const Representation& m);

// The submodule of P_C(s(a)) generated by the path a^- a^+.
Representation tensor_image_module(const CmaPresentation& cma, int cycle_arrow);

struct RecollementItem {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct RecollementReport {
    std::vector<RecollementItem> items;
    bool all_pass() const;
};
RecollementReport verify_recollement_package(const BoundQuiver& bq);

}  // namespace gentle
