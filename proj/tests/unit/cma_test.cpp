#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gentle/cma.hpp"
#include "gentle/error.hpp"
#include "gentle/homodim.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

// Same bound quiver with vertices and arrows shuffled and renamed.
BoundQuiver shuffled(const BoundQuiver& bq, std::mt19937_64& rng) {
    std::vector<int> vp(bq.vertex_count()), ap(bq.arrow_count());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ap.begin(), ap.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ap.begin(), ap.end(), rng);
    std::vector<std::string> vertices(bq.vertex_count());
    for (int v = 0; v < bq.vertex_count(); ++v) vertices[vp[v]] = "w" + std::to_string(v);
    std::vector<Arrow> arrows(bq.arrow_count());
    for (int a = 0; a < bq.arrow_count(); ++a) arrows[ap[a]] = {"x" + std::to_string(a), vp[bq.source(a)], vp[bq.target(a)]};
    std::vector<Relation> rel;
    for (auto [a, b] : bq.relations()) rel.emplace_back(ap[a], ap[b]);
    return BoundQuiver::make(vertices, arrows, rel);
}

bool map_is_valid(const BoundQuiver& a, const BoundQuiver& b, const QuiverIsomorphism& iso) {
    for (int x = 0; x < a.arrow_count(); ++x) {
        int y = iso.arrow_map[x];
        if (b.source(y) != iso.vertex_map[a.source(x)] || b.target(y) != iso.vertex_map[a.target(x)]) return false;
    }
    for (int x = 0; x < a.arrow_count(); ++x)
        for (int y = 0; y < a.arrow_count(); ++y)
            if (a.is_relation(x, y) != b.is_relation(iso.arrow_map[x], iso.arrow_map[y])) return false;
    return true;
}

}  // namespace

TEST(Cma, OrientedTwoCycleStructure) {
    BoundQuiver e3 = load_corpus("e3");
    GprojCatalog catalog = gproj_catalog(e3);
    ASSERT_EQ(catalog.entries.size(), 2u);
    for (const auto& e : catalog.entries) EXPECT_TRUE(e.nonprojective);

    CmaPresentation cma = build_cma(e3);
    EXPECT_EQ(cma.quiver.vertex_count(), 4);
    EXPECT_EQ(cma.quiver.arrow_count(), 4);
    EXPECT_EQ(cma.quiver.relations().size(), 2u);
    EXPECT_TRUE(validate_gentle(cma.quiver).ok());
    EXPECT_EQ(global_dimension(cma.quiver), HomDim::finite(2));
    EXPECT_EQ(cma.quiver.vertex_name(2), "G_a");
    EXPECT_EQ(cma.quiver.arrow_name(0), "a_m");
    EXPECT_EQ(cma.quiver.arrow_name(1), "a_p");

    BoundQuiver ctilde = quotient_by_idempotent(cma.quiver, cma.catalog_vertices());
    EXPECT_EQ(ctilde.vertex_count(), 2);
    EXPECT_EQ(ctilde.arrow_count(), 0);
    BoundQuiver cbar = quotient_by_idempotent(cma.quiver, cma.original_vertices());
    EXPECT_EQ(cbar.arrow_count(), 0);

    CornerAlgebra corner = corner_algebra(cma.quiver, cma.original_vertices());
    EXPECT_EQ(corner.dimension(), 4);
    RecoveredPresentation rec = recover_gentle_presentation(cma.quiver, corner);
    EXPECT_TRUE(find_isomorphism(rec.quiver, e3).has_value());
}

TEST(Cma, AlgebraWithoutCyclesIsUnchanged) {
    BoundQuiver e4 = load_corpus("e4");
    CmaPresentation cma = build_cma(e4);
    EXPECT_TRUE(structurally_equal(cma.quiver, e4));
    EXPECT_TRUE(gproj_catalog(e4).entries.empty());
}

TEST(Cma, RejectsNonGentleInput) {
    BoundQuiver bad = parse_bound_quiver("vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n");
    EXPECT_ANY_THROW(build_cma(bad));
}

TEST(Cma, RecollementPackageOnRandomCyclicAlgebras) {
    int checked = 0;
    for (const auto& s : gentle::testing::random_samples(30)) {
        if (find_forbidden_cycles(s.quiver).empty()) continue;
        RecollementReport r = verify_recollement_package(s.quiver);
        for (const auto& it : r.items) EXPECT_TRUE(it.pass) << s.name << " " << it.name << ": " << it.detail;
        ++checked;
    }
    EXPECT_GT(checked, 3);
}

TEST(Isomorphism, FindsShuffledCopies) {
    std::mt19937_64 rng(3);
    auto samples = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(30)) samples.push_back(s);
    for (const auto& s : samples) {
        BoundQuiver other = shuffled(s.quiver, rng);
        auto iso = find_isomorphism(s.quiver, other);
        ASSERT_TRUE(iso.has_value()) << s.name;
        EXPECT_TRUE(map_is_valid(s.quiver, other, *iso)) << s.name;
    }
}

TEST(Isomorphism, DistinguishesRelations) {
    BoundQuiver e2 = load_corpus("e2");
    BoundQuiver free_a3 = parse_bound_quiver("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
    EXPECT_FALSE(find_isomorphism(e2, free_a3).has_value());
    EXPECT_FALSE(find_isomorphism(load_corpus("kronecker"), load_corpus("e3")).has_value());
    // Reversing a linear A3 gives an isomorphic quiver.
    EXPECT_TRUE(find_isomorphism(e2, opposite(e2)).has_value());
}
