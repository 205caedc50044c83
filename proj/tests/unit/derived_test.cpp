#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "gentle/derived.hpp"
#include "gentle/error.hpp"
#include "gentle/forbidden.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

// Closed homotopy words up to max_len with balance zero, found by plain DFS.
bool exhaustive_band_search(const BoundQuiver& bq, int max_len) {
    const auto letters = homotopy_letters(bq);
    std::vector<HomotopyLetter> cur;
    std::function<bool(int)> dfs = [&](int balance) -> bool {
        if (!cur.empty() && balance == 0 && cur.back().walk_target() == cur.front().walk_source() &&
            homotopy_pair_ok(bq, cur.back(), cur.front()))
            return true;
        if (static_cast<int>(cur.size()) == max_len) return false;
        for (const auto& l : letters) {
            if (!cur.empty() && !homotopy_pair_ok(bq, cur.back(), l)) continue;
            cur.push_back(l);
            bool found = dfs(balance + l.weight());
            cur.pop_back();
            if (found) return true;
        }
        return false;
    };
    return dfs(0);
}

// For a quiver whose underlying graph has exactly one cycle: the number of
// relations running clockwise around the cycle equals the number running
// anticlockwise.
bool clock_condition(const BoundQuiver& bq) {
    const int n = bq.vertex_count(), m = bq.arrow_count();
    std::vector<int> degree(n, 0);
    for (int a = 0; a < m; ++a) {
        ++degree[bq.source(a)];
        ++degree[bq.target(a)];
    }
    std::vector<bool> removed_vertex(n, false), on_cycle(m, true);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (removed_vertex[v] || degree[v] > 1) continue;
            removed_vertex[v] = true;
            changed = true;
            for (int a = 0; a < m; ++a)
                if (on_cycle[a] && (bq.source(a) == v || bq.target(a) == v)) {
                    on_cycle[a] = false;
                    --degree[bq.source(a)];
                    --degree[bq.target(a)];
                }
        }
    }
    int first = -1;
    for (int a = 0; a < m; ++a)
        if (on_cycle[a]) first = first < 0 ? a : first;
    if (first < 0) throw std::logic_error("no cycle");
    std::map<int, bool> along;  // arrow -> points in the direction of traversal
    int vertex = bq.source(first), edge = first;
    while (!along.count(edge)) {
        along[edge] = bq.source(edge) == vertex;
        vertex = along[edge] ? bq.target(edge) : bq.source(edge);
        int next = -1;
        for (int a = 0; a < m && next < 0; ++a)
            if (on_cycle[a] && a != edge && (bq.source(a) == vertex || bq.target(a) == vertex)) next = a;
        edge = next < 0 ? edge : next;  // a loop is its own successor
    }
    int clockwise = 0, anticlockwise = 0;
    for (auto [a, b] : bq.relations())
        if (on_cycle[a] && on_cycle[b]) (along[a] ? clockwise : anticlockwise)++;
    return clockwise == anticlockwise;
}

}  // namespace

TEST(HomotopyBands, ClockConditionOnOneCycleAlgebras) {
    int with_band = 0, without = 0;
    auto samples = gentle::testing::random_samples(60, 1, GeneratorShape::OneCycle);
    samples.push_back({"kronecker", load_corpus("kronecker")});
    samples.push_back({"e3", load_corpus("e3")});
    for (const auto& s : samples) {
        bool expected = clock_condition(s.quiver);
        HomotopyBandSearch r = homotopy_band_exists(s.quiver);
        EXPECT_EQ(r.exists, expected) << s.name << "\n" << serialize(s.quiver);
        (expected ? with_band : without)++;
    }
    EXPECT_GT(with_band, 0);
    EXPECT_GT(without, 0);
}

TEST(HomotopyBands, AgreesWithExhaustiveSearch) {
    auto samples = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(40, 1, GeneratorShape::Any, 5)) samples.push_back(s);
    for (const auto& s : samples) {
        if (s.quiver.arrow_count() > 6) continue;
        HomotopyBandSearch r = homotopy_band_exists(s.quiver);
        if (exhaustive_band_search(s.quiver, 8)) EXPECT_TRUE(r.exists) << s.name;
        if (r.exists) {
            ASSERT_TRUE(r.witness.has_value()) << s.name;
            EXPECT_TRUE(is_homotopy_band(s.quiver, *r.witness).ok) << s.name;
        }
    }
}

TEST(HomotopyBands, RunningExampleWitness) {
    BoundQuiver e1 = load_corpus("e1");
    HomotopyBandSearch r = homotopy_band_exists(e1);
    ASSERT_TRUE(r.exists);
    EXPECT_TRUE(is_homotopy_band(e1, *r.witness).ok);
    EXPECT_TRUE(is_homotopy_band(e1, parse_homotopy_word(e1, "a41 a63*a31^-1 a96^-1 a97*a74")).ok);
}

TEST(HomotopyStrings, LinearA3Count) {
    // Trivial: 3.  One letter: a, b (a*b is zero).  Two letters: a b, since a*b lies in I.
    BoundQuiver e2 = load_corpus("e2");
    EXPECT_EQ(enumerate_homotopy_strings(e2, 1).size(), 5u);
    EXPECT_EQ(enumerate_homotopy_strings(e2, 4).size(), 6u);
}

TEST(HomotopyStrings, PairRules) {
    BoundQuiver e2 = load_corpus("e2");
    EXPECT_TRUE(is_homotopy_string(e2, parse_homotopy_word(e2, "a b")).ok);
    BoundQuiver free_a3 = parse_bound_quiver("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
    EXPECT_ANY_THROW(parse_homotopy_word(free_a3, "a b"));
    EXPECT_NO_THROW(parse_homotopy_word(free_a3, "a*b"));
    BoundQuiver k = load_corpus("kronecker");
    EXPECT_TRUE(is_homotopy_string(k, parse_homotopy_word(k, "a b^-1")).ok);
    EXPECT_ANY_THROW(parse_homotopy_word(k, "a a^-1"));
}

TEST(HomotopyStrings, FormatParseRoundTrip) {
    BoundQuiver e1 = load_corpus("e1");
    for (const auto& h : enumerate_homotopy_strings(e1, 3)) {
        EXPECT_EQ(parse_homotopy_word(e1, format_homotopy_word(e1, h)), h);
        EXPECT_EQ(inverse(inverse(h)), h);
    }
}

TEST(StringComplex, HandComputedWidths) {
    // P3 -> P2 -> P1 for a b over e2: exact except at P1, which leaves S1.
    BoundQuiver e2 = load_corpus("e2");
    WidthReport w2 = hw(e2, parse_homotopy_word(e2, "a b"));
    EXPECT_EQ(w2.hw, 1);
    // Over e4 the composite b*c also vanishes, so P3 contributes c as well.
    BoundQuiver e4 = load_corpus("e4");
    WidthReport w4 = hw(e4, parse_homotopy_word(e4, "a b"));
    EXPECT_EQ(w4.hw, 3);
    EXPECT_EQ(w4.highest_nonzero - w4.lowest_nonzero, 2);
    // A stalk projective has width one.
    EXPECT_EQ(hw(e2, parse_homotopy_word(e2, "e:1")).hw, 1);
}

TEST(StringComplex, DegreesFollowLetterDirections) {
    BoundQuiver k = load_corpus("kronecker");
    HomotopyWord h = parse_homotopy_word(k, "a b^-1");
    EXPECT_EQ(string_complex_degrees(h, 5), (std::vector<int>{5, 4, 5}));
}

TEST(StringComplex, ShiftMovesCohomology) {
    BoundQuiver e1 = load_corpus("e1");
    for (const auto& h : enumerate_homotopy_strings(e1, 3)) {
        WidthReport a = hw(e1, h, 0), b = hw(e1, h, -2);
        EXPECT_EQ(a.hw, b.hw);
        EXPECT_EQ(a.lowest_nonzero - 2, b.lowest_nonzero);
    }
}

TEST(TheoremMain2, CorpusSides) {
    TheoremMain2Report e1 = check_theorem_main2(load_corpus("e1"), 4);
    EXPECT_TRUE(e1.agree);
    EXPECT_LE(e1.max_hw, 2);
    TheoremMain2Report e4 = check_theorem_main2(load_corpus("e4"), 4);
    EXPECT_FALSE(e4.side1);
    EXPECT_FALSE(e4.side2);
}
