#include "gentle/cma.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gentle/error.hpp"
#include "gentle/forbidden.hpp"

namespace gentle {

GprojCatalog gproj_catalog(const BoundQuiver& bq) {
    require_gentle(bq);
    CycleArrowIndex index(bq);
    GprojCatalog catalog;
    for (int a : index.cycle_arrows()) {
        GprojEntry e;
        e.arrow = a;
        e.module = path_ideal_module(bq, make_path(bq, {a}));
        e.nonprojective = !projective_cover_and_syzygy(bq, e.module).kernel.is_zero();
        if (!e.nonprojective)
            throw FalsificationError("ideal " + bq.arrow_name(a) + "A on a forbidden cycle is projective");
        catalog.entries.push_back(std::move(e));
    }
    return catalog;
}

std::vector<int> CmaPresentation::original_vertices() const {
    std::vector<int> out;
    for (size_t v = 0; v < vertex_origin.size(); ++v)
        if (vertex_origin[v] >= 0) out.push_back(static_cast<int>(v));
    return out;
}

CmaPresentation build_cma(const BoundQuiver& bq) {
    require_gentle(bq);
    CycleArrowIndex index(bq);
    const std::vector<int> cycle_arrows = index.cycle_arrows();

    std::set<std::string> vertex_names(bq.vertices().begin(), bq.vertices().end());
    std::set<std::string> arrow_names;
    for (const auto& a : bq.arrows()) arrow_names.insert(a.name);
    auto fresh = [](std::set<std::string>& used, std::string name) {
        while (used.count(name)) name += "_";
        used.insert(name);
        return name;
    };

    CmaPresentation cma;
    std::vector<std::string> vertices = bq.vertices();
    cma.vertex_origin.resize(bq.vertex_count());
    for (int v = 0; v < bq.vertex_count(); ++v) cma.vertex_origin[v] = v;
    cma.vertex_catalog.assign(bq.vertex_count(), -1);
    std::vector<int> catalog_of_arrow(bq.arrow_count(), -1);
    for (int a : cycle_arrows) {
        catalog_of_arrow[a] = static_cast<int>(cma.catalog_arrow.size());
        cma.catalog_arrow.push_back(a);
        cma.catalog_vertex.push_back(static_cast<int>(vertices.size()));
        cma.vertex_catalog.push_back(catalog_of_arrow[a]);
        cma.vertex_origin.push_back(-1);
        vertices.push_back(fresh(vertex_names, "G_" + bq.arrow_name(a)));
    }

    std::vector<Arrow> arrows;
    cma.kept_arrow.assign(bq.arrow_count(), -1);
    cma.split_arrow.assign(bq.arrow_count(), {-1, -1});
    for (int a = 0; a < bq.arrow_count(); ++a) {
        const Arrow& x = bq.arrow(a);
        if (catalog_of_arrow[a] < 0) {
            cma.kept_arrow[a] = static_cast<int>(arrows.size());
            arrows.push_back(x);
            continue;
        }
        const int mid = cma.catalog_vertex[catalog_of_arrow[a]];
        int minus = static_cast<int>(arrows.size());
        arrows.push_back({fresh(arrow_names, x.name + "_m"), x.source, mid});
        arrows.push_back({fresh(arrow_names, x.name + "_p"), mid, x.target});
        cma.split_arrow[a] = {minus, minus + 1};
    }

    // A relation xy survives with x replaced by x^+ and y by y^- whenever
    // they were split.
    std::vector<Relation> relations;
    for (const auto& [x, y] : bq.relations()) {
        int nx = cma.kept_arrow[x] >= 0 ? cma.kept_arrow[x] : cma.split_arrow[x].second;
        int ny = cma.kept_arrow[y] >= 0 ? cma.kept_arrow[y] : cma.split_arrow[y].first;
        relations.emplace_back(nx, ny);
    }
    cma.quiver = BoundQuiver::make(std::move(vertices), std::move(arrows), std::move(relations));
    if (!validate_gentle(cma.quiver).ok()) throw FalsificationError("the constructed CM-Auslander quiver is not gentle");
    return cma;
}

BoundQuiver quotient_by_idempotent(const BoundQuiver& bq, const std::vector<int>& deleted_vertices) {
    std::vector<char> deleted(bq.vertex_count(), 0);
    for (int v : deleted_vertices) {
        if (v < 0 || v >= bq.vertex_count()) throw InvalidInput("idempotent names an unknown vertex");
        deleted[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < bq.vertex_count(); ++v)
        if (!deleted[v]) keep.push_back(v);
    if (keep.empty()) throw InvalidInput("quotient by the identity is the zero algebra");
    return induced_subquiver(bq, keep);
}

CornerAlgebra corner_algebra(const BoundQuiver& bq, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<char> kept(bq.vertex_count(), 0);
    for (int v : keep) kept[v] = 1;

    CornerAlgebra ca;
    ca.keep = keep;
    std::map<NonzeroPath, int> index;
    for (auto& p : enumerate_nonzero_paths(bq))
        if (kept[p.start] && kept[p.end]) {
            index[p] = ca.dimension();
            ca.basis.push_back(std::move(p));
        }
    ca.product.assign(ca.dimension(), std::vector<int>(ca.dimension(), -1));
    for (int i = 0; i < ca.dimension(); ++i)
        for (int j = 0; j < ca.dimension(); ++j)
            if (auto pq = multiply_paths(bq, ca.basis[i], ca.basis[j])) ca.product[i][j] = index.at(*pq);
    return ca;
}

RecoveredPresentation recover_gentle_presentation(const BoundQuiver& ambient, const CornerAlgebra& ca) {
    std::vector<char> kept(ambient.vertex_count(), 0);
    for (int v : ca.keep) kept[v] = 1;

    RecoveredPresentation out;
    std::vector<int> local(ambient.vertex_count(), -1);
    std::vector<std::string> vertices;
    for (const auto& p : ca.basis)
        if (p.trivial()) {
            local[p.start] = static_cast<int>(vertices.size());
            vertices.push_back(ambient.vertex_name(p.start));
            out.vertex_ambient.push_back(p.start);
        }

    // A nontrivial basis path factors through another basis element exactly
    // when it passes through a retained vertex in its interior.
    std::vector<NonzeroPath> gens;
    for (const auto& p : ca.basis) {
        if (p.trivial()) continue;
        bool interior = false;
        for (int i = 0; i + 1 < p.length(); ++i) interior = interior || kept[ambient.target(p.arrows[i])];
        if (!interior) gens.push_back(p);
    }
    std::sort(gens.begin(), gens.end(), [](const NonzeroPath& x, const NonzeroPath& y) {
        return std::make_pair(x.arrows.front(), x.arrows) < std::make_pair(y.arrows.front(), y.arrows);
    });

    std::vector<Arrow> arrows;
    for (const auto& g : gens) {
        std::string name;
        for (size_t i = 0; i < g.arrows.size(); ++i) name += (i ? "_" : "") + ambient.arrow_name(g.arrows[i]);
        arrows.push_back({name, local[g.start], local[g.end]});
    }
    std::vector<Relation> relations;
    for (size_t x = 0; x < gens.size(); ++x)
        for (size_t y = 0; y < gens.size(); ++y)
            if (gens[x].end == gens[y].start && !multiply_paths(ambient, gens[x], gens[y]))
                relations.emplace_back(static_cast<int>(x), static_cast<int>(y));
    out.quiver = BoundQuiver::make(std::move(vertices), std::move(arrows), std::move(relations));
    out.generator_path = std::move(gens);

    size_t presented = 0;
    try {
        presented = enumerate_nonzero_paths(out.quiver).size();
    } catch (const InfiniteDimension&) {
        throw InvalidInput("recovered presentation is infinite-dimensional");
    }
    if (presented != ca.basis.size())
        throw InvalidInput("corner generators do not present the algebra by length-2 monomial relations (" +
                           std::to_string(presented) + " paths vs dimension " + std::to_string(ca.basis.size()) + ")");
    out.gentle = validate_gentle(out.quiver);
    return out;
}

namespace {

struct ArrowSignature {
    size_t out_s, in_s, out_t, in_t;
    bool loop, has_succ, has_pred;
    friend bool operator==(const ArrowSignature&, const ArrowSignature&) = default;
};

ArrowSignature signature(const BoundQuiver& q, int a) {
    int s = q.source(a), t = q.target(a);
    return {q.out_arrows(s).size(), q.in_arrows(s).size(), q.out_arrows(t).size(), q.in_arrows(t).size(),
            s == t,  q.successor(a).has_value(), q.predecessor(a).has_value()};
}

}  // namespace

std::optional<QuiverIsomorphism> find_isomorphism(const BoundQuiver& a, const BoundQuiver& b) {
    if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count() ||
        a.relations().size() != b.relations().size())
        return std::nullopt;

    // Order a's arrows so that each one touches an earlier arrow when possible.
    std::vector<int> order;
    std::vector<char> placed(a.arrow_count(), 0);
    for (int root = 0; root < a.arrow_count(); ++root) {
        if (placed[root]) continue;
        std::vector<int> queue{root};
        placed[root] = 1;
        for (size_t i = 0; i < queue.size(); ++i) {
            int x = queue[i];
            order.push_back(x);
            for (int v : {a.source(x), a.target(x)})
                for (const auto* list : {&a.out_arrows(v), &a.in_arrows(v)})
                    for (int y : *list)
                        if (!placed[y]) {
                            placed[y] = 1;
                            queue.push_back(y);
                        }
        }
    }

    std::vector<ArrowSignature> sig_b;
    for (int y = 0; y < b.arrow_count(); ++y) sig_b.push_back(signature(b, y));

    QuiverIsomorphism iso;
    iso.vertex_map.assign(a.vertex_count(), -1);
    iso.arrow_map.assign(a.arrow_count(), -1);
    std::vector<int> vertex_inv(b.vertex_count(), -1);
    std::vector<char> arrow_used(b.arrow_count(), 0);

    std::function<bool(size_t)> place = [&](size_t k) -> bool {
        if (k == order.size()) return true;
        const int x = order[k];
        const ArrowSignature sx = signature(a, x);
        for (int y = 0; y < b.arrow_count(); ++y) {
            if (arrow_used[y] || !(sig_b[y] == sx)) continue;
            const int sa = a.source(x), ta = a.target(x), sb = b.source(y), tb = b.target(y);
            if (iso.vertex_map[sa] >= 0 ? iso.vertex_map[sa] != sb : vertex_inv[sb] >= 0) continue;
            if (iso.vertex_map[ta] >= 0 ? iso.vertex_map[ta] != tb : (vertex_inv[tb] >= 0 && !(ta == sa && tb == sb)))
                continue;
            if ((sa == ta) != (sb == tb)) continue;
            bool ok = a.is_relation(x, x) == b.is_relation(y, y);
            for (size_t i = 0; i < k && ok; ++i) {
                int x2 = order[i], y2 = iso.arrow_map[x2];
                ok = a.is_relation(x, x2) == b.is_relation(y, y2) && a.is_relation(x2, x) == b.is_relation(y2, y);
            }
            if (!ok) continue;
            bool new_s = iso.vertex_map[sa] < 0, new_t = iso.vertex_map[ta] < 0 && ta != sa;
            if (new_s) {
                iso.vertex_map[sa] = sb;
                vertex_inv[sb] = sa;
            }
            if (new_t) {
                iso.vertex_map[ta] = tb;
                vertex_inv[tb] = ta;
            }
            iso.arrow_map[x] = y;
            arrow_used[y] = 1;
            if (place(k + 1)) return true;
            arrow_used[y] = 0;
            iso.arrow_map[x] = -1;
            if (new_s) {
                iso.vertex_map[sa] = -1;
                vertex_inv[sb] = -1;
            }
            if (new_t) {
                iso.vertex_map[ta] = -1;
                vertex_inv[tb] = -1;
            }
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    // Remaining vertices are isolated on both sides; pair them in order.
    int next_b = 0;
    for (int v = 0; v < a.vertex_count(); ++v) {
        if (iso.vertex_map[v] >= 0) continue;
        while (vertex_inv[next_b] >= 0) ++next_b;
        iso.vertex_map[v] = next_b;
        vertex_inv[next_b] = v;
    }
    return iso;
}

Representation restrict_module(const BoundQuiver& ambient, const RecoveredPresentation& corner,
                               const Representation& m) {
    const BoundQuiver& q = corner.quiver;
    std::vector<int> dims;
    for (int v : corner.vertex_ambient) dims.push_back(m.dim(v));
    std::vector<Matrix> maps;
    for (const auto& path : corner.generator_path) {
        Matrix acc = Matrix::identity(m.dim(path.start));
        for (int x : path.arrows) acc = acc * m.map(x);
        maps.push_back(std::move(acc));
    }
    (void)ambient;
    return Representation::make(q, std::move(dims), std::move(maps));
}

Representation transport(const BoundQuiver& from, const BoundQuiver& to, const QuiverIsomorphism& iso,
                         const Representation& m) {
    std::vector<int> dims(to.vertex_count(), 0);
    for (int v = 0; v < from.vertex_count(); ++v) dims[iso.vertex_map[v]] = m.dim(v);
    std::vector<Matrix> maps(to.arrow_count());
    for (int x = 0; x < from.arrow_count(); ++x) maps[iso.arrow_map[x]] = m.map(x);
    return Representation::make(to, std::move(dims), std::move(maps));
}

Representation tensor_image_module(const CmaPresentation& cma, int cycle_arrow) {
    if (cycle_arrow < 0 || cycle_arrow >= static_cast<int>(cma.split_arrow.size()) ||
        cma.split_arrow[cycle_arrow].first < 0)
        throw InvalidInput("arrow does not lie on a forbidden cycle");
    auto [minus, plus] = cma.split_arrow[cycle_arrow];
    return path_ideal_module(cma.quiver, make_path(cma.quiver, {minus, plus}));
}

bool RecollementReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const RecollementItem& i) { return i.pass; });
}

RecollementReport verify_recollement_package(const BoundQuiver& bq) {
    RecollementReport report;
    const CmaPresentation cma = build_cma(bq);
    const BoundQuiver& c = cma.quiver;
    const GprojCatalog catalog = gproj_catalog(bq);

    const CornerAlgebra corner = corner_algebra(c, cma.original_vertices());
    const RecoveredPresentation pres = recover_gentle_presentation(c, corner);
    const auto iso = find_isomorphism(pres.quiver, bq);
    report.items.push_back({"corner-recovers-algebra", iso.has_value(),
                            iso ? "corner at the original vertices has dimension " + std::to_string(corner.dimension()) +
                                      " and is isomorphic to the input"
                                : "no bound-quiver isomorphism between the recovered corner and the input"});

    auto restricted_to_a = [&](const Representation& m) { return transport(pres.quiver, bq, *iso, restrict_module(c, pres, m)); };

    bool restriction_ok = iso.has_value();
    bool tensor_ok = iso.has_value();
    std::string restriction_detail, tensor_detail;
    for (size_t k = 0; k < catalog.entries.size() && iso; ++k) {
        const GprojEntry& entry = catalog.entries[k];
        const std::string name = bq.arrow_name(entry.arrow);
        Representation p = projective_module(c, cma.catalog_vertex[k]);
        bool ok = is_isomorphic(bq, restricted_to_a(p), entry.module);
        restriction_ok = restriction_ok && ok;
        if (!ok) restriction_detail += "restriction of P(" + c.vertex_name(cma.catalog_vertex[k]) + ") is not " + name + "A; ";

        Representation x = tensor_image_module(cma, entry.arrow);
        bool nonproj = !projective_cover_and_syzygy(c, x).kernel.is_zero();
        bool back = is_isomorphic(bq, restricted_to_a(x), entry.module);
        tensor_ok = tensor_ok && nonproj && back;
        if (!nonproj) tensor_detail += "module for " + name + " is projective; ";
        if (!back) tensor_detail += "module for " + name + " does not restrict to " + name + "A; ";
    }
    const std::string count = std::to_string(catalog.entries.size()) + " catalog entries";
    report.items.push_back({"catalog-projectives-restrict", restriction_ok,
                            restriction_detail.empty() ? count + " checked" : restriction_detail});
    report.items.push_back({"tensor-images", tensor_ok, tensor_detail.empty() ? count + " checked" : tensor_detail});

    const auto catalog_vertices = cma.catalog_vertices();
    if (catalog_vertices.empty()) {
        report.items.push_back({"quotient-semisimple", true, "no catalog vertices; the quotient is zero"});
    } else {
        BoundQuiver cbar = quotient_by_idempotent(c, cma.original_vertices());
        report.items.push_back({"quotient-semisimple", cbar.arrow_count() == 0,
                                std::to_string(cbar.vertex_count()) + " vertices, " +
                                    std::to_string(cbar.arrow_count()) + " arrows"});
    }
    return report;
}

}  // namespace gentle
