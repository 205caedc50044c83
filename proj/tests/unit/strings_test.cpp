#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "gentle/error.hpp"
#include "gentle/strings.hpp"
#include "samples.hpp"

using namespace gentle;
using gentle::testing::load_corpus;

namespace {

// Brute-force oracle: letters as (arrow, inverse) pairs, validity checked
// from the definitions without touching the library's string code.
using Seq = std::vector<std::pair<int, bool>>;

int from(const BoundQuiver& bq, std::pair<int, bool> l) { return l.second ? bq.target(l.first) : bq.source(l.first); }
int to(const BoundQuiver& bq, std::pair<int, bool> l) { return l.second ? bq.source(l.first) : bq.target(l.first); }

bool adjacent_ok(const BoundQuiver& bq, std::pair<int, bool> x, std::pair<int, bool> y) {
    if (to(bq, x) != from(bq, y)) return false;
    if (x.first == y.first && x.second != y.second) return false;
    if (!x.second && !y.second && bq.is_relation(x.first, y.first)) return false;
    if (x.second && y.second && bq.is_relation(y.first, x.first)) return false;
    return true;
}

void extend(const BoundQuiver& bq, Seq& cur, int max_len, const std::function<void(const Seq&)>& visit) {
    visit(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int a = 0; a < bq.arrow_count(); ++a)
        for (bool inv : {false, true}) {
            std::pair<int, bool> l{a, inv};
            if (!cur.empty() && !adjacent_ok(bq, cur.back(), l)) continue;
            cur.push_back(l);
            extend(bq, cur, max_len, visit);
            cur.pop_back();
        }
}

long brute_string_count(const BoundQuiver& bq, int max_len) {
    long directed = 0;
    Seq cur;
    extend(bq, cur, max_len, [&](const Seq& s) { directed += !s.empty(); });
    return bq.vertex_count() + directed / 2;
}

Seq invert(const Seq& s) {
    Seq r(s.rbegin(), s.rend());
    for (auto& l : r) l.second = !l.second;
    return r;
}

long brute_band_count(const BoundQuiver& bq, int max_len) {
    std::set<Seq> classes;
    Seq cur;
    extend(bq, cur, max_len, [&](const Seq& s) {
        const size_t n = s.size();
        if (n == 0 || !adjacent_ok(bq, s.back(), s.front())) return;
        for (size_t p = 1; p < n; ++p)
            if (n % p == 0 && std::equal(s.begin(), s.end() - p, s.begin() + p)) return;  // not primitive
        Seq best = s;
        for (const Seq& base : {s, invert(s)})
            for (size_t r = 0; r < n; ++r) {
                Seq rot(base.begin() + r, base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + r);
                best = std::min(best, rot);
            }
        classes.insert(best);
    });
    return static_cast<long>(classes.size());
}

}  // namespace

TEST(Strings, EnumerationMatchesBruteForce) {
    std::vector<gentle::testing::Sample> samples = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(15)) samples.push_back(s);
    for (const auto& s : samples)
        for (int len : {0, 1, 3, 6})
            EXPECT_EQ(static_cast<long>(enumerate_strings(s.quiver, len).size()), brute_string_count(s.quiver, len))
                << s.name << " length " << len;
}

TEST(Strings, BandEnumerationMatchesBruteForce) {
    std::vector<gentle::testing::Sample> samples = gentle::testing::corpus();
    for (const auto& s : gentle::testing::random_samples(15, 1, GeneratorShape::OneCycle)) samples.push_back(s);
    for (const auto& s : samples)
        EXPECT_EQ(static_cast<long>(enumerate_bands(s.quiver, 6).size()), brute_band_count(s.quiver, 6)) << s.name;
}

TEST(Strings, KroneckerHasOneBandUpToLengthFour) {
    // b^-1 a is primitive; its square has length 4 and is not primitive.
    BoundQuiver k = load_corpus("kronecker");
    EXPECT_EQ(enumerate_bands(k, 4).size(), 1u);
}

TEST(Strings, RelationInsideWordIsRejected) {
    BoundQuiver e2 = load_corpus("e2");
    EXPECT_FALSE(is_string(e2, parse_word(e2, "a b")).ok);
    EXPECT_FALSE(is_string(e2, parse_word(e2, "b^-1 a^-1")).ok);
    EXPECT_THROW(require_string(e2, parse_word(e2, "a b")), NotAString);
    EXPECT_TRUE(is_string(e2, parse_word(e2, "a")).ok);
}

TEST(Strings, InverseLetterCancellationIsRejected) {
    BoundQuiver k = load_corpus("kronecker");
    EXPECT_FALSE(is_string(k, make_word(k, {{0, false}, {0, true}})).ok);
    EXPECT_TRUE(is_string(k, make_word(k, {{0, false}, {1, true}})).ok);
}

TEST(Strings, FormatParseRoundTrip) {
    BoundQuiver e1 = load_corpus("e1");
    for (const auto& w : enumerate_strings(e1, 4)) EXPECT_EQ(parse_word(e1, format_word(e1, w)), w);
}

TEST(Strings, CanonicalStringIsOrientationInvariant) {
    BoundQuiver e1 = load_corpus("e1");
    for (const auto& w : enumerate_strings(e1, 4))
        EXPECT_EQ(canonical_string(e1, w), canonical_string(e1, inverse(e1, w)));
}

TEST(Strings, CanonicalBandIsRotationInvariant) {
    BoundQuiver k = load_corpus("kronecker");
    Word band = parse_word(k, "band: b^-1 a");
    Word rotated = parse_word(k, "band: a b^-1");
    EXPECT_EQ(canonical_band(k, band), canonical_band(k, rotated));
    EXPECT_THROW(canonical_band(k, parse_word(k, "a")), NotABand);
}
