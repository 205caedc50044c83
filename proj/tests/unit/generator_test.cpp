#include <gtest/gtest.h>

#include "gentle/classify.hpp"
#include "gentle/error.hpp"
#include "gentle/generator.hpp"

using namespace gentle;

TEST(Generator, SameSeedSameQuiver) {
    GeneratorConfig c;
    c.seed = 42;
    EXPECT_EQ(serialize(generate(c)), serialize(generate(c)));
    GeneratorConfig d = c;
    d.seed = 43;
    EXPECT_NE(serialize(generate(c)), serialize(generate(d)));
}

TEST(Generator, GoldenTreeSeedOne) {
    GeneratorConfig c;
    c.seed = 1;
    c.shape = GeneratorShape::Tree;
    c.min_vertices = c.max_vertices = 5;
    EXPECT_EQ(serialize(generate(c)),
              "vertices: 1 2 3 4 5\n"
              "arrow a1: 1 -> 2\n"
              "arrow a2: 1 -> 3\n"
              "arrow a3: 2 -> 4\n"
              "arrow a4: 5 -> 4\n"
              "relations: a1*a3\n");
}

TEST(Generator, OutputsAreGentleAndFinite) {
    for (GeneratorShape shape : {GeneratorShape::Any, GeneratorShape::Tree, GeneratorShape::OneCycle})
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            GeneratorConfig c;
            c.seed = seed;
            c.shape = shape;
            BoundQuiver bq = generate(c);
            EXPECT_TRUE(validate_gentle(bq).ok());
            EXPECT_FALSE(find_relation_free_cycle(bq).has_value());
            EXPECT_LE(bq.vertex_count(), c.max_vertices);
            if (shape == GeneratorShape::Tree) EXPECT_EQ(shape_class(bq).shape, Shape::Tree);
            if (shape == GeneratorShape::OneCycle) EXPECT_EQ(shape_class(bq).shape, Shape::OneCycle);
        }
}

TEST(Generator, ExactArrowCount) {
    GeneratorConfig c;
    c.min_vertices = c.max_vertices = 6;
    c.arrows = 8;
    EXPECT_EQ(generate(c).arrow_count(), 8);
}

TEST(Generator, UnsatisfiableConfigurations) {
    GeneratorConfig c;
    c.min_vertices = c.max_vertices = 1;
    c.arrows = 5;
    EXPECT_THROW(generate(c), InvalidInput);
    GeneratorConfig d;
    d.min_vertices = 4;
    d.max_vertices = 2;
    EXPECT_THROW(generate(d), InvalidInput);
    EXPECT_THROW(parse_generator_shape("torus"), InvalidInput);
}
