#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace racg {

using VertexId = int;
// Always kept sorted ascending; vertex order is first-appearance order.
using VertexSet = std::vector<VertexId>;

bool contains(const VertexSet& s, VertexId v);
bool is_subset(const VertexSet& small, const VertexSet& big);
VertexSet set_intersection(const VertexSet& x, const VertexSet& y);
VertexSet set_union(const VertexSet& x, const VertexSet& y);
VertexSet make_set(std::vector<VertexId> v);

class DefiningGraph;

// Incremental construction; duplicate edges collapse, self-loops throw SELF_LOOP.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string_view name);
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(VertexId a, VertexId b);
  std::optional<VertexId> find(std::string_view name) const;
  DefiningGraph build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

class DefiningGraph {
 public:
  DefiningGraph() = default;

  static DefiningGraph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  // Throws std::out_of_range for an unknown label.
  VertexId id(std::string_view name) const;
  VertexSet ids(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const VertexSet& s) const;

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(VertexId u, VertexId v) const { return matrix_[u * names_.size() + v] != 0; }
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  int edge_count() const;

  // Identifies the graph for MIXED_GRAPH checks; equal graphs share it.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const DefiningGraph& x, const DefiningGraph& y);

 private:
  friend class GraphBuilder;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint8_t> matrix_;
  std::uint64_t fingerprint_ = 0;
};

enum class GraphFormat { EdgeList, DotSubset, Json };

DefiningGraph parse_graph(std::string_view text, GraphFormat format);
// Sniffs JSON (leading '{') and DOT (leading "graph"/"strict"), else EDGE_LIST.
GraphFormat detect_format(std::string_view text);
std::string serialize_graph(const DefiningGraph& g, GraphFormat format);

VertexSet essential_vertices(const DefiningGraph& g);

// Components of g minus `removed`, each sorted, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const DefiningGraph& g, const VertexSet& removed);
int count_components_after_removal(const DefiningGraph& g, const VertexSet& removed);
bool disconnects(const DefiningGraph& g, const VertexSet& removed);
// False if either vertex is in `removed`.
bool connected_after_removal(const DefiningGraph& g, const VertexSet& removed, VertexId u, VertexId v);

struct SubdividedK4 {
  std::array<VertexId, 4> corners;  // ascending
  // Branch k joins corners kCornerPairs[k]; each path lists its endpoints.
  std::array<std::vector<VertexId>, 6> branches;

  VertexSet vertices() const;
};

inline constexpr std::array<std::pair<int, int>, 6> kCornerPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::vector<SubdividedK4> subdivided_k4_list(const DefiningGraph& g);

std::optional<std::array<VertexId, 4>> find_induced_square(const DefiningGraph& g);
bool is_hyperbolic(const DefiningGraph& g);

}  // namespace racg
