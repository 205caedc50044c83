#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gentle/quiver.hpp"

namespace gentle {

enum class GeneratorShape { Any, Tree, OneCycle };
GeneratorShape parse_generator_shape(const std::string& text);  // "any" | "tree" | "one-cycle"
std::string to_string(GeneratorShape s);

struct GeneratorConfig {
    int min_vertices = 1;
    int max_vertices = 8;
    std::optional<int> arrows;     // exact arrow count; chosen from the shape when absent
    double arrow_density = 0.5;    // chance of each extra arrow for shape Any
    double relation_density = 0.5; // chance of a relation where gentleness leaves it optional
    std::uint64_t seed = 1;
    GeneratorShape shape = GeneratorShape::Any;
    int max_attempts = 1000;
};

// Builds a connected gentle bound quiver (a forest when fewer arrows than
// vertices minus one are requested).  Rejection-samples away infinite
// dimensional results; throws InvalidInput when the configuration is
// unsatisfiable or the attempts run out.
BoundQuiver generate(const GeneratorConfig& config);

}  // namespace gentle
