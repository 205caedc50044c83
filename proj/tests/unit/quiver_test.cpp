#include <gtest/gtest.h>

#include "gentle/error.hpp"
#include "gentle/quiver.hpp"
#include "samples.hpp"

using namespace gentle;

TEST(Quiver, ParsesVerticesArrowsAndRelations) {
    BoundQuiver bq = parse_bound_quiver("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelations: a*b\n");
    EXPECT_EQ(bq.vertex_count(), 3);
    EXPECT_EQ(bq.arrow_count(), 2);
    EXPECT_EQ(bq.arrow_name(1), "b");
    EXPECT_TRUE(validate_gentle(bq).ok());
}

TEST(Quiver, SingleVertexWithoutArrows) {
    BoundQuiver bq = parse_bound_quiver("vertices: 1\n");
    EXPECT_EQ(bq.vertex_count(), 1);
    EXPECT_EQ(bq.arrow_count(), 0);
}

TEST(Quiver, RejectsNonComposableRelation) {
    EXPECT_THROW(parse_bound_quiver("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\nrelations: a*b\n"), Error);
}

TEST(Quiver, RejectsUndeclaredVertexAndDuplicates) {
    EXPECT_THROW(parse_bound_quiver("vertices: 1\narrow a: 1 -> 2\n"), Error);
    EXPECT_THROW(parse_bound_quiver("vertices: 1 1\n"), Error);
    EXPECT_THROW(parse_bound_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n"), Error);
}

TEST(Quiver, ParseErrorCarriesPosition) {
    try {
        parse_bound_quiver("vertices: 1 2\narrow a 1 -> 2\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Quiver, SerializeRoundTrips) {
    for (const auto& s : gentle::testing::corpus()) {
        BoundQuiver again = parse_bound_quiver(serialize(s.quiver));
        EXPECT_TRUE(structurally_equal(again, s.quiver)) << s.name;
    }
}

TEST(Gentle, ThreeOutgoingArrowsViolate) {
    BoundQuiver bq = parse_bound_quiver("vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n");
    GentleVerdict v = validate_gentle(bq);
    ASSERT_FALSE(v.ok());
    EXPECT_THROW(require_gentle(bq), InvalidInput);
}

TEST(Gentle, KroneckerIsGentle) {
    EXPECT_TRUE(validate_gentle(gentle::testing::load_corpus("kronecker")).ok());
}

TEST(Gentle, TwoRelationsOnOnePairOfSidesViolate) {
    // 1 -a-> 2 -c-> 3, 4 -b-> 2 with both a*c and b*c: c follows two killed arrows.
    BoundQuiver bq = parse_bound_quiver(
        "vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 4 -> 2\narrow c: 2 -> 3\nrelations: a*c, b*c\n");
    EXPECT_FALSE(validate_gentle(bq).ok());
}

TEST(Paths, CountsMatchHandEnumeration) {
    // e2: e1, e2, e3, a, b (a*b = 0).  Kronecker: e1, e2, a, b.  e3: e1, e2, a, b.
    EXPECT_EQ(enumerate_nonzero_paths(gentle::testing::load_corpus("e2")).size(), 5u);
    EXPECT_EQ(enumerate_nonzero_paths(gentle::testing::load_corpus("kronecker")).size(), 4u);
    EXPECT_EQ(enumerate_nonzero_paths(gentle::testing::load_corpus("e3")).size(), 4u);
    // e4 1->2->3->4 with a*b and b*c: trivial 4 plus a, b, c.
    EXPECT_EQ(enumerate_nonzero_paths(gentle::testing::load_corpus("e4")).size(), 7u);
}

TEST(Paths, RelationFreeCycleIsDetected) {
    BoundQuiver bq = parse_bound_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n");
    EXPECT_TRUE(find_relation_free_cycle(bq).has_value());
    EXPECT_FALSE(find_relation_free_cycle(gentle::testing::load_corpus("e3")).has_value());
    // One relation on the 2-cycle already kills every long path.
    BoundQuiver one = parse_bound_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelations: a*b\n");
    EXPECT_FALSE(find_relation_free_cycle(one).has_value());
}

TEST(Opposite, ReversesArrowsAndRelations) {
    BoundQuiver e2 = gentle::testing::load_corpus("e2");
    BoundQuiver op = opposite(e2);
    EXPECT_EQ(op.source(0), e2.target(0));
    EXPECT_EQ(op.target(0), e2.source(0));
    EXPECT_TRUE(validate_gentle(op).ok());
    EXPECT_TRUE(structurally_equal(opposite(op), e2));
}

TEST(Components, SplitsDisjointPieces) {
    BoundQuiver bq = parse_bound_quiver("vertices: 1 2 3 4\narrow a: 1 -> 2\narrow b: 3 -> 4\n");
    EXPECT_EQ(connected_components(bq).size(), 2u);
    BoundQuiver sub = induced_subquiver(bq, {0, 1});
    EXPECT_EQ(sub.vertex_count(), 2);
    EXPECT_EQ(sub.arrow_count(), 1);
}
