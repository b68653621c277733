#include "racg/random_graphs.hpp"

#include <string>

#include "racg/validate.hpp"

namespace racg {

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

bool level1(const DefiningGraph& g) { return validate(g, 1).passed; }

DefiningGraph from_ears(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> len(4, max_vertices);
  const int cycle = std::min(len(rng), max_vertices);
  GraphBuilder b;
  for (int i = 0; i < cycle; ++i) b.add_edge(vname(i), vname((i + 1) % cycle));
  int n = cycle;
  std::uniform_int_distribution<int> ears(0, 3);
  for (int k = ears(rng); k > 0; --k) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    int room = max_vertices - n;
    std::uniform_int_distribution<int> inner(0, std::min(room, 3));
    int m = inner(rng);
    std::string prev = vname(u);
    for (int i = 0; i < m; ++i) {
      b.add_edge(prev, vname(n));
      prev = vname(n++);
    }
    b.add_edge(prev, vname(v));
  }
  return b.build();
}

DefiningGraph from_density(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> size(4, max_vertices);
  const int n = size(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.25 + 0.35 * unit(rng);
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(vname(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < p) b.add_edge(vname(i), vname(j));
  return b.build();
}

}  // namespace

DefiningGraph random_level1_graph(std::mt19937_64& rng, int max_vertices) {
  std::bernoulli_distribution ears(0.6);
  while (true) {
    DefiningGraph g = ears(rng) ? from_ears(rng, max_vertices) : from_density(rng, max_vertices);
    if (g.size() <= max_vertices && level1(g)) return g;
  }
}

std::vector<DefiningGraph> random_corpus(std::uint64_t seed, int count, int max_vertices) {
  std::mt19937_64 rng(seed);
  std::vector<DefiningGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_level1_graph(rng, max_vertices));
  return out;
}

}  // namespace racg
