#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// A graph passing level-1 validation with 4..max_vertices vertices, built
// from a cycle plus random ears or drawn as a random bipartite-leaning graph.
DefiningGraph random_level1_graph(std::mt19937_64& rng, int max_vertices);

// `count` graphs from one seed; deterministic for a fixed seed.
std::vector<DefiningGraph> random_corpus(std::uint64_t seed, int count, int max_vertices);

}  // namespace racg
