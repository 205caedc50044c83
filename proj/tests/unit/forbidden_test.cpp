#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gentle/forbidden.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

// Relation graph on arrows, a -> b when (a, b) in I.  Cycles are collected
// as sets of arrows, which is enough to compare up to rotation.
std::set<std::set<int>> brute_forbidden_cycles(const BoundQuiver& bq) {
    std::set<std::set<int>> found;
    for (int a = 0; a < bq.arrow_count(); ++a) {
        std::vector<int> walk{a};
        for (int step = 0; step < bq.arrow_count(); ++step) {
            int next = -1;
            for (int b = 0; b < bq.arrow_count(); ++b)
                if (bq.is_relation(walk.back(), b)) next = b;
            if (next < 0) break;
            if (next == a) {
                found.insert(std::set<int>(walk.begin(), walk.end()));
                break;
            }
            walk.push_back(next);
        }
    }
    return found;
}

std::vector<gentle::testing::Sample> samples() {
    auto all = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(40)) all.push_back(s);
    return all;
}

}  // namespace

TEST(ForbiddenCycles, MatchRelationGraphCycles) {
    for (const auto& s : samples()) {
        std::set<std::set<int>> got;
        for (const auto& c : find_forbidden_cycles(s.quiver)) got.insert(std::set<int>(c.begin(), c.end()));
        EXPECT_EQ(got, brute_forbidden_cycles(s.quiver)) << s.name;
    }
}

TEST(ForbiddenCycles, RunningExampleHasTwo) {
    BoundQuiver e1 = load_corpus("e1");
    auto cycles = find_forbidden_cycles(e1);
    ASSERT_EQ(cycles.size(), 2u);
    EXPECT_EQ(format_arrows(e1, cycles[0]), "a12*a23*a31");
    CycleArrowIndex index(e1);
    EXPECT_TRUE(index.on_cycle(e1.arrow_index("a12")));
    EXPECT_FALSE(index.on_cycle(e1.arrow_index("a41")));
}

TEST(ForbiddenPaths, ExtensionsFollowSuccessors) {
    BoundQuiver e4 = load_corpus("e4");
    Extension ext = extend_right_maximal(e4, e4.arrow_index("a"));
    ASSERT_FALSE(ext.on_cycle());
    EXPECT_EQ(format_arrows(e4, ext.path.arrows), "a*b*c");
    EXPECT_TRUE(ext.path.right_maximal);

    BoundQuiver e1 = load_corpus("e1");
    EXPECT_TRUE(extend_right_maximal(e1, e1.arrow_index("a12")).on_cycle());
    // a74*a41 stops at a41, which starts no relation.
    Extension tail = extend_right_maximal(e1, e1.arrow_index("a74"));
    ASSERT_FALSE(tail.on_cycle());
    EXPECT_EQ(format_arrows(e1, tail.path.arrows), "a74*a41");
}

TEST(ForbiddenPaths, MaximalPathsAreMaximal) {
    for (const auto& s : samples()) {
        for (const auto& p : maximal_forbidden_paths(s.quiver)) {
            if (p.cycle || p.arrows.empty()) continue;
            for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
                EXPECT_TRUE(s.quiver.is_relation(p.arrows[i], p.arrows[i + 1])) << s.name;
            for (int b = 0; b < s.quiver.arrow_count(); ++b) {
                EXPECT_FALSE(s.quiver.is_relation(p.arrows.back(), b)) << s.name;
                EXPECT_FALSE(s.quiver.is_relation(b, p.arrows.front())) << s.name;
            }
        }
    }
}

TEST(ForbiddenPaths, LemmaHoldsOnSamples) {
    for (const auto& s : samples()) EXPECT_TRUE(check_lemma_forbcyc(s.quiver).holds) << s.name;
}

TEST(ForbiddenModules, StringsThroughCycleArrows) {
    BoundQuiver e1 = load_corpus("e1");
    EXPECT_TRUE(is_forbidden_module(e1, parse_word(e1, "a12")));
    EXPECT_TRUE(is_forbidden_module(e1, parse_word(e1, "a41 a12")));
    EXPECT_FALSE(is_forbidden_module(e1, parse_word(e1, "e:1")));
    EXPECT_FALSE(is_forbidden_module(e1, parse_word(e1, "a41")));
}

TEST(SourcesSinks, LinearQuiver) {
    BoundQuiver e2 = load_corpus("e2");
    SourcesSinks ss = strong_sources_sinks(e2);
    EXPECT_NE(std::find(ss.strong_sources.begin(), ss.strong_sources.end(), 0), ss.strong_sources.end());
    EXPECT_NE(std::find(ss.strong_sinks.begin(), ss.strong_sinks.end(), 2), ss.strong_sinks.end());
}
