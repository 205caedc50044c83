#include <gtest/gtest.h>

#include "gentle/classify.hpp"
#include "gentle/error.hpp"
#include "gentle/homodim.hpp"
#include "gentle/representation.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

HomDim oracle(const ResolutionResult& r) { return r.cap_reached ? HomDim::infinite() : HomDim::finite(r.value); }

// Quasi-tilted for string-finite algebras: gl.dim <= 2 and no string module
// with pd >= 2 and id >= 2, all read off resolutions.
bool brute_quasi_tilted(const BoundQuiver& bq) {
    HomDim gl = HomDim::finite(0);
    for (int v = 0; v < bq.vertex_count(); ++v) gl = max(gl, oracle(resolve_pd(bq, string_module(bq, trivial_word(v)))));
    if (HomDim::finite(2) < gl) return false;
    for (const auto& w : enumerate_strings(bq, 2 * bq.arrow_count() + 2)) {
        Representation m = string_module(bq, w);
        HomDim pd = oracle(resolve_pd(bq, m)), id = oracle(resolve_id(bq, m));
        if (!(pd < HomDim::finite(2)) && !(id < HomDim::finite(2))) return false;
    }
    return true;
}

}  // namespace

TEST(QuasiTilted, MatchesResolutionsOnStringFiniteAlgebras) {
    int checked = 0;
    auto samples = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(40)) samples.push_back(s);
    for (const auto& s : samples) {
        if (band_exists(StringAutomaton(s.quiver))) continue;
        EXPECT_EQ(is_quasi_tilted(s.quiver).quasi_tilted, brute_quasi_tilted(s.quiver)) << s.name;
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(QuasiTilted, CorpusValues) {
    EXPECT_TRUE(is_quasi_tilted(load_corpus("e2")).quasi_tilted);
    EXPECT_TRUE(is_quasi_tilted(load_corpus("kronecker")).quasi_tilted);
    EXPECT_FALSE(is_quasi_tilted(load_corpus("e4")).quasi_tilted);
    EXPECT_FALSE(is_quasi_tilted(load_corpus("e1")).quasi_tilted);
}

TEST(TheoremMain, AgreesOnCorpus) {
    for (const auto& s : gentle::testing::corpus()) EXPECT_TRUE(check_theorem_main(s.quiver).agree) << s.name;
}

TEST(TheoremMain, StrictModeThrowsOnlyOnDisagreement) {
    EXPECT_NO_THROW(check_theorem_main(load_corpus("e1"), true));
}

TEST(Shapes, CorpusShapes) {
    EXPECT_EQ(shape_class(load_corpus("e2")).shape, Shape::Tree);
    EXPECT_EQ(shape_class(load_corpus("kronecker")).shape, Shape::OneCycle);
    EXPECT_EQ(shape_class(load_corpus("e3")).shape, Shape::OneCycle);
    EXPECT_EQ(shape_class(load_corpus("e1")).shape, Shape::MultiCycle);
}

TEST(KgDimension, ClassificationRows) {
    EXPECT_EQ(kg_dimension(load_corpus("e2")).str(), "Exactly(0)");
    EXPECT_EQ(kg_dimension(load_corpus("e4")).str(), "Exactly(0)");
    EXPECT_EQ(kg_dimension(load_corpus("e3")).str(), "Exactly(1)");
    EXPECT_EQ(kg_dimension(load_corpus("kronecker")).str(), "AtLeast(2)");
    EXPECT_THROW(kg_dimension(load_corpus("e1")), UnsupportedShape);
}

TEST(KgDimension, RandomTreesAreZero) {
    for (const auto& s : gentle::testing::random_samples(30, 1, GeneratorShape::Tree)) {
        KgVerdict v = kg_dimension(s.quiver);
        EXPECT_TRUE(v.exact() && v.value == 0) << s.name << " " << v.str();
        EXPECT_TRUE(derived_discrete(s.quiver)) << s.name;
        EXPECT_TRUE(piecewise_hereditary_gentle(s.quiver)) << s.name;
    }
}

TEST(KgDimension, DisjointUnionTakesMaximum) {
    BoundQuiver bq = parse_bound_quiver(
        "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 3 -> 4\narrow d: 4 -> 3\nrelations: c*d, d*c\n");
    EXPECT_EQ(kg_dimension(bq).str(), "AtLeast(2)");
}

TEST(CorollaryMain3, OrientedTwoCycle) {
    CorollaryMain3Report r = check_corollary_main3(load_corpus("e3"));
    EXPECT_FALSE(r.a_iso_c);
    EXPECT_EQ(r.clause1, ClauseResult::Pass);
    EXPECT_EQ(r.clause2, ClauseResult::Pass);
    EXPECT_EQ(r.clause3, ClauseResult::Pass);
}

TEST(CorollaryMain3, KroneckerClauseThreeFails) {
    // C is A itself, so its idempotent quotient keeps the band.
    CorollaryMain3Report r = check_corollary_main3(load_corpus("kronecker"));
    EXPECT_TRUE(r.a_iso_c);
    EXPECT_EQ(r.clause2, ClauseResult::Pass);
    EXPECT_EQ(r.clause3, ClauseResult::Fail);
}
