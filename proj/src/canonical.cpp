#include "racg/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace racg {

namespace {

// Marks become extra vertices joined to their members, so one colour
// refinement handles both.
struct Incidence {
  int size = 0;
  std::vector<std::vector<int>> nbrs;
  std::vector<std::vector<char>> adj;
  std::vector<int> base_colour;
};

std::vector<int> rank_keys(const std::vector<std::vector<int>>& keys) {
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

int distinct(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

std::vector<int> refine(const Incidence& g, std::vector<int> colour) {
  int classes = distinct(colour);
  while (true) {
    std::vector<std::vector<int>> keys(g.size);
    for (int v = 0; v < g.size; ++v) {
      std::vector<int> nc;
      for (int w : g.nbrs[v]) nc.push_back(colour[w]);
      std::sort(nc.begin(), nc.end());
      keys[v].push_back(colour[v]);
      keys[v].insert(keys[v].end(), nc.begin(), nc.end());
    }
    colour = rank_keys(keys);
    int now = distinct(colour);
    if (now == classes) return colour;
    classes = now;
  }
}

std::string encode(const Incidence& g, const std::vector<int>& colour) {
  std::vector<int> order(g.size);
  for (int v = 0; v < g.size; ++v) order[colour[v]] = v;
  std::string s;
  for (int i = 0; i < g.size; ++i) {
    s += std::to_string(g.base_colour[order[i]]);
    s += ':';
    for (int j = i + 1; j < g.size; ++j) s += g.adj[order[i]][order[j]] ? '1' : '0';
    s += ';';
  }
  return s;
}

void search(const Incidence& g, const std::vector<int>& colour, std::optional<std::string>& best) {
  std::vector<int> count(g.size, 0);
  for (int c : colour) ++count[c];
  int cell = -1;
  for (int c = 0; c < g.size; ++c)
    if (count[c] > 1) {
      cell = c;
      break;
    }
  if (cell < 0) {
    std::string s = encode(g, colour);
    if (!best || s < *best) best = std::move(s);
    return;
  }
  for (int v = 0; v < g.size; ++v) {
    if (colour[v] != cell) continue;
    std::vector<std::vector<int>> keys(g.size);
    for (int u = 0; u < g.size; ++u) keys[u] = {colour[u], u == v ? 0 : 1};
    search(g, refine(g, rank_keys(keys)), best);
  }
}

}  // namespace

std::string canonical_certificate(int n, const std::vector<std::vector<char>>& adj,
                                  const std::vector<std::vector<int>>& marks) {
  Incidence g;
  const int m = static_cast<int>(marks.size());
  g.size = n + m;
  g.nbrs.assign(g.size, {});
  g.adj.assign(g.size, std::vector<char>(g.size, 0));
  g.base_colour.assign(g.size, 0);
  auto link = [&g](int u, int v) {
    if (g.adj[u][v]) return;
    g.adj[u][v] = g.adj[v][u] = 1;
    g.nbrs[u].push_back(v);
    g.nbrs[v].push_back(u);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) link(u, v);
  for (int k = 0; k < m; ++k) {
    g.base_colour[n + k] = 1 + static_cast<int>(marks[k].size());
    for (int v : marks[k]) link(v, n + k);
  }
  std::vector<std::vector<int>> keys(g.size);
  for (int v = 0; v < g.size; ++v) keys[v] = {g.base_colour[v]};
  std::optional<std::string> best;
  search(g, refine(g, rank_keys(keys)), best);
  return "n" + std::to_string(n) + "m" + std::to_string(m) + "|" + best.value_or("");
}

}  // namespace racg
