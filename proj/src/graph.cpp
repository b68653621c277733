#include "racg/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "racg/error.hpp"

namespace racg {

bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet set_intersection(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

VertexSet make_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexId GraphBuilder::add_vertex(std::string_view name) {
  std::string key(name);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  VertexId id = static_cast<VertexId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at '" + std::string(a) + "'");
  VertexId u = add_vertex(a);
  VertexId v = add_vertex(b);
  add_edge(u, v);
}

void GraphBuilder::add_edge(VertexId a, VertexId b) {
  if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at '" + names_.at(a) + "'");
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

std::optional<VertexId> GraphBuilder::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DefiningGraph GraphBuilder::build() const {
  DefiningGraph g;
  const std::size_t n = names_.size();
  g.names_ = names_;
  g.index_ = index_;
  g.adj_.assign(n, {});
  g.matrix_.assign(n * n, 0);
  for (auto [u, v] : edges_) {
    if (g.matrix_[u * n + v]) continue;
    g.matrix_[u * n + v] = g.matrix_[v * n + u] = 1;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());

  // FNV-1a over names and the sorted edge list.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& s : names_) {
    for (unsigned char c : s) mix(c);
    mix(0xff);
  }
  for (const auto& [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v));
  }
  g.fingerprint_ = h;
  return g;
}

DefiningGraph DefiningGraph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  GraphBuilder b;
  for (const auto& [x, y] : edges) b.add_edge(x, y);
  return b.build();
}

std::optional<VertexId> DefiningGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId DefiningGraph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
  return *v;
}

VertexSet DefiningGraph::ids(const std::vector<std::string>& names) const {
  std::vector<VertexId> out;
  out.reserve(names.size());
  for (const auto& s : names) out.push_back(id(s));
  return make_set(std::move(out));
}

std::vector<std::string> DefiningGraph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(names_.at(v));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> DefiningGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int DefiningGraph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += static_cast<int>(row.size());
  return twice / 2;
}

bool operator==(const DefiningGraph& x, const DefiningGraph& y) {
  return x.names_ == y.names_ && x.adj_ == y.adj_;
}

VertexSet essential_vertices(const DefiningGraph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.degree(v) >= 3) out.push_back(v);
  return out;
}

namespace {

// Labels each surviving vertex with a component index (-1 for removed).
int label_components(const DefiningGraph& g, const VertexSet& removed, std::vector<int>& label) {
  const int n = g.size();
  label.assign(n, -1);
  std::vector<char> gone(n, 0);
  for (VertexId v : removed) gone[v] = 1;
  int count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (gone[s] || label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (gone[w] || label[w] >= 0) continue;
        label[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

std::vector<VertexSet> components_after_removal(const DefiningGraph& g, const VertexSet& removed) {
  std::vector<int> label;
  int count = label_components(g, removed, label);
  std::vector<VertexSet> out(count);
  for (VertexId v = 0; v < g.size(); ++v)
    if (label[v] >= 0) out[label[v]].push_back(v);
  return out;
}

int count_components_after_removal(const DefiningGraph& g, const VertexSet& removed) {
  std::vector<int> label;
  return label_components(g, removed, label);
}

bool disconnects(const DefiningGraph& g, const VertexSet& removed) {
  return count_components_after_removal(g, removed) >= 2;
}

bool connected_after_removal(const DefiningGraph& g, const VertexSet& removed, VertexId u, VertexId v) {
  std::vector<int> label;
  label_components(g, removed, label);
  return label[u] >= 0 && label[u] == label[v];
}

VertexSet SubdividedK4::vertices() const {
  std::vector<VertexId> all;
  for (const auto& b : branches) all.insert(all.end(), b.begin(), b.end());
  return make_set(std::move(all));
}

std::vector<SubdividedK4> subdivided_k4_list(const DefiningGraph& g) {
  // Corners have degree >= 3 in any subdivision, so only essential vertices qualify.
  const VertexSet ev = essential_vertices(g);
  const int n = g.size();
  std::vector<SubdividedK4> out;
  std::set<std::pair<std::array<VertexId, 4>, std::array<VertexSet, 6>>> seen;

  std::vector<char> used(n, 0);
  SubdividedK4 cur;

  // Depth-first search for a path from `u` to `target` through unused vertices.
  std::function<void(int)> next_branch;
  std::function<void(int, VertexId, VertexId, std::vector<VertexId>&)> extend;

  extend = [&](int k, VertexId u, VertexId target, std::vector<VertexId>& path) {
    for (VertexId w : g.neighbors(u)) {
      if (w == target) {
        path.push_back(w);
        cur.branches[k] = path;
        next_branch(k + 1);
        path.pop_back();
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend(k, w, target, path);
      path.pop_back();
      used[w] = 0;
    }
  };

  next_branch = [&](int k) {
    if (k == 6) {
      std::array<VertexSet, 6> key;
      for (int i = 0; i < 6; ++i) key[i] = make_set(cur.branches[i]);
      if (seen.emplace(cur.corners, std::move(key)).second) out.push_back(cur);
      return;
    }
    auto [i, j] = kCornerPairs[k];
    std::vector<VertexId> path{cur.corners[i]};
    extend(k, cur.corners[i], cur.corners[j], path);
  };

  const int m = static_cast<int>(ev.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d) {
          cur.corners = {ev[a], ev[b], ev[c], ev[d]};
          for (VertexId x : cur.corners) used[x] = 1;
          next_branch(0);
          for (VertexId x : cur.corners) used[x] = 0;
        }
  return out;
}

std::optional<std::array<VertexId, 4>> find_induced_square(const DefiningGraph& g) {
  // An induced 4-cycle u-x-v-y has u,v non-adjacent with two non-adjacent common neighbours.
  const int n = g.size();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<VertexId> common;
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!g.adjacent(common[i], common[j])) return std::array<VertexId, 4>{u, common[i], v, common[j]};
    }
  return std::nullopt;
}

bool is_hyperbolic(const DefiningGraph& g) { return !find_induced_square(g).has_value(); }

}  // namespace racg
