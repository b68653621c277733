#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

enum class CollectionKind { Pair, Triple };

// A cut pair {a,b} or cut triple {a,b,mid}; a < b.
struct CutCollection {
  CollectionKind kind = CollectionKind::Pair;
  VertexId a = -1;
  VertexId b = -1;
  VertexId mid = -1;
  std::uint64_t graph = 0;  // fingerprint of the source graph

  VertexSet generators() const;
  friend bool operator==(const CutCollection& x, const CutCollection& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.mid == y.mid && x.graph == y.graph;
  }
  // Pairs first, then by (a, b, mid).
  friend bool operator<(const CutCollection& x, const CutCollection& y);
};

std::string describe(const DefiningGraph& g, const CutCollection& c);

enum class CylinderClass { TwoEnded, VA, VFD };

std::string_view to_string(CylinderClass k);
CylinderClass classify_cylinder(std::size_t common_adjacents);

struct CylinderData {
  CutCollection collection;
  VertexSet common_adjacents;
  CylinderClass klass = CylinderClass::TwoEnded;
  VertexSet vertex_set;
};

// Asserts non-adjacency of the output pairs (Standing Assumption 1 precondition).
std::vector<CutCollection> find_cut_pairs(const DefiningGraph& g);
std::vector<CutCollection> find_cut_triples(const DefiningGraph& g);

// True when y separates the non-adjacent vertices of x. MIXED_GRAPH if either
// collection was not produced from g.
bool crosses(const DefiningGraph& g, const CutCollection& x, const CutCollection& y);

// All pairs then all triples; crossed_by[i][j] == crosses(g, all[i], all[j]).
struct CrossingTable {
  std::vector<CutCollection> all;
  std::vector<std::vector<char>> crossed_by;

  bool is_crossed(std::size_t i) const;
};

CrossingTable crossing_table(const DefiningGraph& g);
std::vector<CutCollection> uncrossed_collections(const DefiningGraph& g);
std::vector<CutCollection> uncrossed_collections(const CrossingTable& table);

CylinderData commensurator(const DefiningGraph& g, const CutCollection& x);
// Commensurators of uncrossed collections, one per distinct vertex set.
std::vector<CylinderData> cylinders(const DefiningGraph& g);

namespace detail {
// Cut pairs without the Standing Assumption 1 assertion; used by validation.
std::vector<CutCollection> enumerate_cut_pairs(const DefiningGraph& g);
}  // namespace detail

}  // namespace racg
