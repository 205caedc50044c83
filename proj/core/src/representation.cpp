#include "gentle/representation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gentle/error.hpp"

namespace gentle {

Representation Representation::make(const BoundQuiver& bq, std::vector<int> dims, std::vector<Matrix> maps) {
    if (static_cast<int>(dims.size()) != bq.vertex_count()) throw InvalidInput("dimension vector has the wrong length");
    if (static_cast<int>(maps.size()) != bq.arrow_count()) throw InvalidInput("one matrix per arrow is required");
    for (int d : dims)
        if (d < 0) throw InvalidInput("negative dimension");
    for (int a = 0; a < bq.arrow_count(); ++a)
        if (maps[a].rows() != dims[bq.source(a)] || maps[a].cols() != dims[bq.target(a)])
            throw InvalidInput("matrix of arrow " + bq.arrow_name(a) + " has the wrong shape");
    for (const auto& [x, y] : bq.relations())
        if (!(maps[x] * maps[y]).is_zero())
            throw InvalidInput("relation " + bq.arrow_name(x) + "*" + bq.arrow_name(y) + " does not vanish");
    Representation r;
    r.dims_ = std::move(dims);
    r.maps_ = std::move(maps);
    return r;
}

Representation Representation::zero(const BoundQuiver& bq) {
    std::vector<Matrix> maps(bq.arrow_count());
    return make(bq, std::vector<int>(bq.vertex_count(), 0), std::move(maps));
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

namespace {

// Positions of the walk's basis vectors inside their vertex spaces.
struct WalkBasis {
    std::vector<int> dims;
    std::vector<int> local;  // local index of x_i
};

WalkBasis walk_basis(const BoundQuiver& bq, const Word& w, int points) {
    WalkBasis b{std::vector<int>(bq.vertex_count(), 0), {}};
    for (int i = 0; i < points; ++i) {
        int v = w.vertex_at(bq, i);
        b.local.push_back(b.dims[v]++);
    }
    return b;
}

std::vector<Matrix> zero_maps(const BoundQuiver& bq, const std::vector<int>& dims) {
    std::vector<Matrix> maps;
    for (const auto& a : bq.arrows()) maps.emplace_back(dims[a.source], dims[a.target]);
    return maps;
}

// Nonzero paths from each vertex in breadth-first order, with the arrow
// action: next[p][a] is the index of p*a or -1.
struct PathTable {
    std::vector<NonzeroPath> paths;
    std::vector<std::vector<int>> from;
    std::vector<std::vector<int>> next;
    std::vector<int> parent;
    std::vector<int> last_arrow;

    explicit PathTable(const BoundQuiver& bq) {
        if (auto cycle = find_relation_free_cycle(bq))
            throw InfiniteDimension("the algebra is infinite-dimensional");
        from.resize(bq.vertex_count());
        for (int v = 0; v < bq.vertex_count(); ++v) {
            std::vector<int> layer{add(bq, trivial_path(v), -1, -1)};
            from[v].push_back(layer[0]);
            while (!layer.empty()) {
                std::vector<int> grown;
                for (int p : layer) {
                    for (int a : bq.out_arrows(paths[p].end)) {
                        if (!paths[p].trivial() && bq.is_relation(paths[p].arrows.back(), a)) continue;
                        NonzeroPath q = paths[p];
                        q.arrows.push_back(a);
                        q.end = bq.target(a);
                        int idx = add(bq, std::move(q), p, a);
                        next[p][a] = idx;
                        from[v].push_back(idx);
                        grown.push_back(idx);
                    }
                }
                layer = std::move(grown);
            }
        }
    }

    int add(const BoundQuiver& bq, NonzeroPath p, int par, int arrow) {
        paths.push_back(std::move(p));
        next.emplace_back(bq.arrow_count(), -1);
        parent.push_back(par);
        last_arrow.push_back(arrow);
        return static_cast<int>(paths.size()) - 1;
    }
};

// Module spanned by the listed paths (closed under right multiplication by
// arrows as far as the table reaches); local index by end vertex.
Representation module_on_paths(const BoundQuiver& bq, const PathTable& table, const std::vector<int>& members) {
    std::vector<int> dims(bq.vertex_count(), 0);
    std::vector<int> local(table.paths.size(), -1);
    for (int p : members) local[p] = dims[table.paths[p].end]++;
    auto maps = zero_maps(bq, dims);
    for (int p : members)
        for (int a : bq.out_arrows(table.paths[p].end)) {
            int q = table.next[p][a];
            if (q < 0) continue;
            if (local[q] < 0) throw FalsificationError("path set is not closed under the arrow action");
            maps[a](local[p], local[q]) = 1;
        }
    return Representation::make(bq, std::move(dims), std::move(maps));
}

}  // namespace

Representation string_module(const BoundQuiver& bq, const Word& s) {
    require_string(bq, s);
    const int n = s.length();
    WalkBasis b = walk_basis(bq, s, n + 1);
    auto maps = zero_maps(bq, b.dims);
    for (int i = 1; i <= n; ++i) {
        Letter l = s.letters[i - 1];
        if (l.direct())
            maps[l.arrow](b.local[i - 1], b.local[i]) = 1;
        else
            maps[l.arrow](b.local[i], b.local[i - 1]) = 1;
    }
    return Representation::make(bq, b.dims, std::move(maps));
}

Representation band_module(const BoundQuiver& bq, const Word& band, const JordanSpec& j) {
    auto v = is_band(bq, band);
    if (!v.ok) throw NotABand(format_word(bq, band) + " is not a band: " + v.reason);
    if (j.eigenvalue == 0) throw InvalidInput("band eigenvalue must be nonzero");
    if (j.size < 1) throw InvalidInput("Jordan block size must be positive");
    const int n = band.length(), m = j.size;
    WalkBasis b = walk_basis(bq, band, n);  // x_n is x_0
    std::vector<int> dims(bq.vertex_count(), 0);
    for (int d = 0; d < bq.vertex_count(); ++d) dims[d] = b.dims[d] * m;
    auto maps = zero_maps(bq, dims);
    Matrix jordan(m, m);
    for (int k = 0; k < m; ++k) {
        jordan(k, k) = j.eigenvalue;
        if (k + 1 < m) jordan(k, k + 1) = 1;
    }
    for (int i = 1; i <= n; ++i) {
        Letter l = band.letters[i - 1];
        int from = b.local[i - 1] * m, to = b.local[i % n] * m;
        if (l.inverse) std::swap(from, to);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                Scalar value = i == 1 ? jordan(r, c) : Scalar(r == c ? 1 : 0);
                if (value != 0) maps[l.arrow](from + r, to + c) += value;
            }
    }
    return Representation::make(bq, std::move(dims), std::move(maps));
}

Representation path_ideal_module(const BoundQuiver& bq, const NonzeroPath& p) {
    PathTable table(bq);
    std::vector<int> members;
    for (int q : table.from[p.start]) {
        const NonzeroPath& path = table.paths[q];
        if (path.length() < p.length()) continue;
        if (std::equal(p.arrows.begin(), p.arrows.end(), path.arrows.begin())) members.push_back(q);
    }
    if (members.empty()) throw InvalidInput("path is zero");
    return module_on_paths(bq, table, members);
}

Representation projective_module(const BoundQuiver& bq, int v) { return path_ideal_module(bq, trivial_path(v)); }

Representation dual(const BoundQuiver& bq, const Representation& m) {
    std::vector<Matrix> maps;
    maps.reserve(m.maps().size());
    for (const auto& x : m.maps()) maps.push_back(x.transpose());
    return Representation::make(opposite(bq), m.dims(), std::move(maps));
}

Representation injective_module(const BoundQuiver& bq, int v) {
    BoundQuiver op = opposite(bq);
    return dual(op, projective_module(op, v));
}

Representation direct_sum(const BoundQuiver& bq, const Representation& a, const Representation& b) {
    std::vector<int> dims(bq.vertex_count());
    for (int v = 0; v < bq.vertex_count(); ++v) dims[v] = a.dim(v) + b.dim(v);
    auto maps = zero_maps(bq, dims);
    for (int x = 0; x < bq.arrow_count(); ++x) {
        maps[x].set_block(0, 0, a.map(x));
        maps[x].set_block(a.dim(bq.source(x)), a.dim(bq.target(x)), b.map(x));
    }
    return Representation::make(bq, std::move(dims), std::move(maps));
}

bool is_homomorphism(const BoundQuiver& bq, const Representation& m, const Representation& n, const Homomorphism& f) {
    if (static_cast<int>(f.maps.size()) != bq.vertex_count()) return false;
    for (int v = 0; v < bq.vertex_count(); ++v)
        if (f.maps[v].rows() != m.dim(v) || f.maps[v].cols() != n.dim(v)) return false;
    for (int a = 0; a < bq.arrow_count(); ++a)
        if (m.map(a) * f.maps[bq.target(a)] != f.maps[bq.source(a)] * n.map(a)) return false;
    return true;
}

std::vector<Homomorphism> hom_space(const BoundQuiver& bq, const Representation& m, const Representation& n) {
    // Unknowns: the entries of every f_v, vertex by vertex, row-major.
    std::vector<int> offset(bq.vertex_count() + 1, 0);
    for (int v = 0; v < bq.vertex_count(); ++v) offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
    const int unknowns = offset.back();
    if (unknowns == 0) return {};
    auto var = [&](int v, int i, int j) { return offset[v] + i * n.dim(v) + j; };

    int equations = 0;
    for (int a = 0; a < bq.arrow_count(); ++a) equations += m.dim(bq.source(a)) * n.dim(bq.target(a));
    Matrix system(equations, unknowns);
    int row = 0;
    for (int a = 0; a < bq.arrow_count(); ++a) {
        const int s = bq.source(a), t = bq.target(a);
        const Matrix& ma = m.map(a);
        const Matrix& na = n.map(a);
        for (int i = 0; i < m.dim(s); ++i)
            for (int j = 0; j < n.dim(t); ++j, ++row) {
                // (M_a f_t)(i, j) - (f_s N_a)(i, j) = 0
                for (int k = 0; k < m.dim(t); ++k)
                    if (ma(i, k) != 0) system(row, var(t, k, j)) += ma(i, k);
                for (int l = 0; l < n.dim(s); ++l)
                    if (na(l, j) != 0) system(row, var(s, i, l)) -= na(l, j);
            }
    }
    Matrix basis = nullspace(system);
    std::vector<Homomorphism> homs;
    for (int b = 0; b < basis.rows(); ++b) {
        Homomorphism f;
        for (int v = 0; v < bq.vertex_count(); ++v) {
            Matrix fv(m.dim(v), n.dim(v));
            for (int i = 0; i < m.dim(v); ++i)
                for (int j = 0; j < n.dim(v); ++j) fv(i, j) = basis(b, var(v, i, j));
            f.maps.push_back(std::move(fv));
        }
        homs.push_back(std::move(f));
    }
    return homs;
}

namespace {

bool combination_invertible(const BoundQuiver& bq, const std::vector<Homomorphism>& basis,
                            const std::vector<Scalar>& coeffs) {
    for (int v = 0; v < bq.vertex_count(); ++v) {
        Matrix fv = basis[0].maps[v].scaled(coeffs[0]);
        for (size_t k = 1; k < basis.size(); ++k)
            if (coeffs[k] != 0) fv = fv + basis[k].maps[v].scaled(coeffs[k]);
        if (!is_invertible(fv)) return false;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const BoundQuiver& bq, const Representation& m, const Representation& n, std::uint64_t seed) {
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    auto homs = hom_space(bq, m, n);
    if (homs.empty()) return false;
    if (hom_space(bq, n, m).size() != homs.size()) return false;

    std::mt19937_64 rng(seed);
    std::vector<Scalar> coeffs(homs.size());
    for (int trial = 0; trial < 20; ++trial) {
        for (auto& c : coeffs) c = static_cast<long>(rng() % 2001) - 1000;
        if (combination_invertible(bq, homs, coeffs)) return true;
    }

    const size_t d = homs.size();
    if (d > 7) throw Inconclusive("no invertible homomorphism found and the coefficient lattice is too large to scan");
    std::vector<int> digits(d, 0);
    while (true) {
        for (size_t k = 0; k < d; ++k) coeffs[k] = digits[k] - 2;
        if (combination_invertible(bq, homs, coeffs)) return true;
        size_t k = 0;
        while (k < d && digits[k] == 4) digits[k++] = 0;
        if (k == d) break;
        ++digits[k];
    }
    return false;
}

ProjectiveCover projective_cover_and_syzygy(const BoundQuiver& bq, const Representation& m) {
    PathTable table(bq);
    const int nv = bq.vertex_count();

    // Top: standard basis vectors completing the radical at each vertex.
    struct Generator {
        int vertex;
        int index;
    };
    std::vector<Generator> gens;
    ProjectiveCover out;
    out.top.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        if (m.dim(v) == 0) continue;
        Matrix radical(0, m.dim(v));
        for (int a : bq.in_arrows(v)) radical = radical.stacked(m.map(a));
        for (int j : complement_indices(radical)) {
            gens.push_back({v, j});
            ++out.top[v];
        }
    }

    // Basis of the cover at u: pairs (generator, path from its vertex to u).
    std::vector<std::vector<std::pair<int, int>>> basis(nv);
    std::vector<std::vector<int>> local(gens.size(), std::vector<int>(table.paths.size(), -1));
    std::vector<std::vector<Matrix>> image(gens.size(), std::vector<Matrix>(table.paths.size()));
    for (size_t g = 0; g < gens.size(); ++g) {
        for (int p : table.from[gens[g].vertex]) {
            const NonzeroPath& path = table.paths[p];
            local[g][p] = static_cast<int>(basis[path.end].size());
            basis[path.end].emplace_back(static_cast<int>(g), p);
            if (table.parent[p] < 0) {
                Matrix e(1, m.dim(gens[g].vertex));
                e(0, gens[g].index) = 1;
                image[g][p] = std::move(e);
            } else {
                image[g][p] = image[g][table.parent[p]] * m.map(table.last_arrow[p]);
            }
        }
    }

    std::vector<int> cover_dims(nv);
    for (int u = 0; u < nv; ++u) cover_dims[u] = static_cast<int>(basis[u].size());
    auto cover_maps = zero_maps(bq, cover_dims);
    for (int u = 0; u < nv; ++u)
        for (size_t i = 0; i < basis[u].size(); ++i) {
            auto [g, p] = basis[u][i];
            for (int a : bq.out_arrows(u)) {
                int q = table.next[p][a];
                if (q >= 0) cover_maps[a](static_cast<int>(i), local[g][q]) = 1;
            }
        }
    out.cover = Representation::make(bq, cover_dims, std::move(cover_maps));

    std::vector<Matrix> kernel_basis(nv);
    std::vector<int> kernel_dims(nv);
    for (int u = 0; u < nv; ++u) {
        Matrix phi(cover_dims[u], m.dim(u));
        for (size_t i = 0; i < basis[u].size(); ++i) {
            auto [g, p] = basis[u][i];
            phi.set_block(static_cast<int>(i), 0, image[g][p]);
        }
        if (rank(phi) != m.dim(u)) throw FalsificationError("projective cover is not surjective");
        out.cover_map.maps.push_back(phi);
        kernel_basis[u] = left_nullspace(phi);
        kernel_dims[u] = kernel_basis[u].rows();
    }
    auto kernel_maps = zero_maps(bq, kernel_dims);
    for (int a = 0; a < bq.arrow_count(); ++a) {
        const int s = bq.source(a), t = bq.target(a);
        if (kernel_dims[s] == 0 || kernel_dims[t] == 0) continue;
        Matrix y = kernel_basis[s] * out.cover.map(a);
        auto x = solve_left(kernel_basis[t], y);
        if (!x) throw FalsificationError("kernel of the projective cover is not a submodule");
        kernel_maps[a] = std::move(*x);
    }
    out.kernel = Representation::make(bq, std::move(kernel_dims), std::move(kernel_maps));
    return out;
}

ResolutionResult resolve_pd(const BoundQuiver& bq, const Representation& m, int cap) {
    ResolutionResult r;
    r.syzygy_dims.push_back(m.total_dim());
    if (m.is_zero()) return r;
    Representation current = m;
    for (int n = 0; n <= cap; ++n) {
        Representation next = projective_cover_and_syzygy(bq, current).kernel;
        r.syzygy_dims.push_back(next.total_dim());
        if (next.is_zero()) {
            r.value = n;
            return r;
        }
        current = std::move(next);
    }
    r.cap_reached = true;
    return r;
}

ResolutionResult resolve_id(const BoundQuiver& bq, const Representation& m, int cap) {
    return resolve_pd(opposite(bq), dual(bq, m), cap);
}

ComplexOfReps ComplexOfReps::make(const BoundQuiver& bq, int low, std::vector<Representation> terms,
                                  std::vector<Homomorphism> differentials) {
    if (terms.empty()) throw InvalidInput("a complex needs at least one term");
    if (differentials.size() + 1 != terms.size()) throw InvalidInput("one differential between consecutive terms");
    for (size_t i = 0; i < differentials.size(); ++i)
        if (!is_homomorphism(bq, terms[i], terms[i + 1], differentials[i]))
            throw InvalidInput("differential in degree " + std::to_string(low + static_cast<int>(i)) +
                               " is not a module homomorphism");
    for (size_t i = 0; i + 1 < differentials.size(); ++i)
        for (int v = 0; v < bq.vertex_count(); ++v)
            if (!(differentials[i].maps[v] * differentials[i + 1].maps[v]).is_zero())
                throw InvalidInput("differentials compose to a nonzero map in degree " +
                                   std::to_string(low + static_cast<int>(i)));
    ComplexOfReps x;
    x.low_ = low;
    x.terms_ = std::move(terms);
    x.diffs_ = std::move(differentials);
    return x;
}

std::vector<CohomologyDegree> cohomology_dims(const BoundQuiver& bq, const ComplexOfReps& x) {
    std::vector<CohomologyDegree> out;
    const auto& terms = x.terms();
    const auto& d = x.differentials();
    for (size_t i = 0; i < terms.size(); ++i) {
        CohomologyDegree h;
        h.degree = x.low() + static_cast<int>(i);
        for (int v = 0; v < bq.vertex_count(); ++v) {
            int kernel = terms[i].dim(v) - (i < d.size() ? rank(d[i].maps[v]) : 0);
            int image = i > 0 ? rank(d[i - 1].maps[v]) : 0;
            h.dims.push_back(kernel - image);
            h.total += kernel - image;
        }
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace gentle
