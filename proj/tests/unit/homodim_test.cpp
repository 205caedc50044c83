#include <gtest/gtest.h>

#include "gentle/homodim.hpp"
#include "gentle/representation.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

HomDim oracle(const ResolutionResult& r) { return r.cap_reached ? HomDim::infinite() : HomDim::finite(r.value); }

std::vector<gentle::testing::Sample> mixed_samples() {
    auto all = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(20)) all.push_back(s);
    for (const auto& s : gentle::testing::random_samples(10, 100, GeneratorShape::OneCycle)) all.push_back(s);
    return all;
}

}  // namespace

TEST(HomDim, OrderAndMax) {
    EXPECT_TRUE(HomDim::finite(3) < HomDim::infinite());
    EXPECT_EQ(max(HomDim::finite(2), HomDim::finite(5)), HomDim::finite(5));
    EXPECT_EQ(HomDim::infinite().str(), "inf");
}

TEST(ProjDim, ValleyBetweenTwoArrowsGivesOne) {
    // 1 -a-> 2 <-b- 3: the word a b^-1 is the injective at 2, projective cover P1 + P3 with kernel S2 = P2.
    BoundQuiver bq = parse_bound_quiver("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n");
    Word s = parse_word(bq, "a b^-1");
    EXPECT_EQ(oracle(resolve_pd(bq, string_module(bq, s))), HomDim::finite(1));
    EXPECT_EQ(proj_dim_string(bq, s), HomDim::finite(1));
}

TEST(ProjDim, LinearA4WithFullRelations) {
    BoundQuiver e4 = load_corpus("e4");
    EXPECT_EQ(proj_dim_string(e4, parse_word(e4, "e:1")), HomDim::finite(3));
    EXPECT_EQ(global_dimension(e4), HomDim::finite(3));
}

TEST(ProjDim, FormulaMatchesResolutionOnMixedSamples) {
    for (const auto& s : mixed_samples()) {
        GentleContext ctx(s.quiver);
        for (const auto& w : enumerate_strings(s.quiver, 5)) {
            Representation m = string_module(s.quiver, w);
            EXPECT_EQ(proj_dim_string(ctx, w), oracle(resolve_pd(s.quiver, m))) << s.name << " " << format_word(s.quiver, w);
            EXPECT_EQ(inj_dim_string(ctx, w), oracle(resolve_id(s.quiver, m))) << s.name << " " << format_word(s.quiver, w);
        }
    }
}

TEST(GlobalDim, EqualsMaxOverSimples) {
    for (const auto& s : mixed_samples()) {
        HomDim expected = HomDim::finite(0);
        for (int v = 0; v < s.quiver.vertex_count(); ++v)
            expected = max(expected, oracle(resolve_pd(s.quiver, string_module(s.quiver, trivial_word(v)))));
        EXPECT_EQ(global_dimension(s.quiver), expected) << s.name;
    }
}

TEST(FinDim, MatchesExhaustiveStringsWhenThereAreNoBands) {
    int checked = 0;
    for (const auto& s : mixed_samples()) {
        StringAutomaton automaton(s.quiver);
        if (band_exists(automaton)) continue;
        const int len = 2 * s.quiver.arrow_count() + 2;
        HomDim best = HomDim::finite(0);
        bool exhaustive = true;
        for (const auto& w : enumerate_strings(s.quiver, len)) {
            if (w.length() == len) exhaustive = false;
            HomDim pd = oracle(resolve_pd(s.quiver, string_module(s.quiver, w)));
            if (pd.is_finite()) best = max(best, pd);
        }
        ASSERT_TRUE(exhaustive) << s.name;
        EXPECT_EQ(finitistic_dimension(s.quiver), best) << s.name;
        ++checked;
    }
    EXPECT_GT(checked, 5);
}

TEST(FinDim, CorpusValues) {
    EXPECT_EQ(finitistic_dimension(load_corpus("e1")), HomDim::finite(2));
    EXPECT_EQ(finitistic_dimension(load_corpus("e3")), HomDim::finite(0));
    EXPECT_EQ(global_dimension(load_corpus("e1")), HomDim::infinite());
    EXPECT_EQ(global_dimension(load_corpus("kronecker")), HomDim::finite(1));
}

TEST(Bands, AutomatonAgreesWithEnumeration) {
    for (const auto& s : mixed_samples()) {
        StringAutomaton automaton(s.quiver);
        EXPECT_EQ(band_exists(automaton), !enumerate_bands(s.quiver, 2 * s.quiver.arrow_count()).empty()) << s.name;
    }
}

TEST(Bands, KroneckerBandHasDimensionsOne) {
    BoundQuiver k = load_corpus("kronecker");
    Word band = parse_word(k, "band: b^-1 a");
    auto [pd, id] = band_dims(k, band);
    EXPECT_EQ(pd, HomDim::finite(1));
    EXPECT_EQ(id, HomDim::finite(1));
    Representation m = band_module(k, band, JordanSpec{3, 2});
    EXPECT_EQ(oracle(resolve_pd(k, m)), HomDim::finite(1));
}

TEST(StringClasses, WitnessDimensionsMatchFormula) {
    for (const auto& s : mixed_samples()) {
        GentleContext ctx(s.quiver);
        for (const auto& c : string_classes(ctx)) {
            EXPECT_EQ(c.pd, proj_dim_string(ctx, c.witness)) << s.name;
            EXPECT_EQ(c.id, inj_dim_string(ctx, c.witness)) << s.name;
        }
    }
}
