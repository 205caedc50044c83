// The four structural properties over a wider random sweep than the
// acceptance gate uses.

#include <gtest/gtest.h>

#include "properties.hpp"

using namespace gentle::testing;

namespace {

std::vector<Sample> sweep() {
    std::vector<Sample> all = corpus();
    for (auto shape : {gentle::GeneratorShape::Any, gentle::GeneratorShape::OneCycle, gentle::GeneratorShape::Tree})
        for (const auto& s : random_samples(40, 1000, shape, 10)) all.push_back(s);
    return all;
}

}  // namespace

TEST(Properties, ForbiddenPathsEndOnCyclesOrAvoidThem) {
    PropertyResult r = property_forbcyc(sweep());
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Properties, AutomatonEndPairsMatchEnumeration) {
    PropertyResult r = property_pumping(sweep(), 9);
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_GT(r.checked, 50);
}

TEST(Properties, BandsHaveDimensionOne) {
    PropertyResult r = property_band_dims(sweep(), 6);
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_GT(r.checked, 0);
}

TEST(Properties, InjectiveDimensionIsProjectiveDimensionOverOpposite) {
    PropertyResult r = property_duality(sweep(), 4);
    EXPECT_TRUE(r.pass) << r.detail;
}
