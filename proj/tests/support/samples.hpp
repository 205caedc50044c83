#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentle/generator.hpp"
#include "gentle/quiver.hpp"

namespace gentle::testing {

struct Sample {
    std::string name;
    BoundQuiver quiver;
};

std::string corpus_path(const std::string& name);
BoundQuiver load_corpus(const std::string& name);  // "e1" -> corpus/e1.quiver
std::vector<Sample> corpus();                      // e1, e2, e3, kronecker, e4

// Seeds first_seed .. first_seed + count - 1, shape and vertex bound as given.
std::vector<Sample> random_samples(int count, std::uint64_t first_seed = 1, GeneratorShape shape = GeneratorShape::Any,
                                   int max_vertices = 8);

}  // namespace gentle::testing
