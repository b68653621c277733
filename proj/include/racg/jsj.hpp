#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "racg/cuts.hpp"
#include "racg/graph.hpp"

namespace racg {

enum class NodeKind { Cylinder, Hanging, Rigid };
enum class HangingSource { PairwiseSeparating, CrossingTriples };
enum class EdgeKind { DInf, DInfXZ2 };

std::string_view to_string(NodeKind k);
std::string_view to_string(HangingSource s);
std::string_view to_string(EdgeKind k);

struct HangingData {
  VertexSet vertices;
  HangingSource source = HangingSource::PairwiseSeparating;
};

struct RigidData {
  VertexSet vertices;
};

struct GocNode {
  int id = 0;
  NodeKind kind = NodeKind::Cylinder;
  VertexSet gens;
  CylinderClass klass = CylinderClass::TwoEnded;  // cylinders only
  VertexSet collection;                           // cylinders: cut collection generators
  HangingSource source = HangingSource::PairwiseSeparating;  // hanging only
  std::string label;                              // rigid: canonical certificate
};

struct GocEdge {
  int cyl = 0;
  int other = 0;
  VertexSet gens;
  EdgeKind kind = EdgeKind::DInf;
};

// Finite bipartite quotient of the tree of cylinders. Vertex ids in `gens`
// index into `generators`.
struct GraphOfCylinders {
  std::vector<std::string> generators;
  std::vector<GocNode> nodes;
  std::vector<GocEdge> edges;

  // Indices into `edges` incident to `node`.
  std::vector<int> incident(int node) const;
  int neighbor(const GocEdge& e, int node) const { return e.cyl == node ? e.other : e.cyl; }
  int count(NodeKind kind) const;
};

inline constexpr std::size_t kDefaultRigidCap = 24;

// RACG_RIGID_CAP when set to a positive integer, otherwise kDefaultRigidCap.
std::size_t rigid_cap_from_env();

struct BuildOptions {
  std::size_t rigid_cap = kDefaultRigidCap;
};

bool pairwise_separates(const DefiningGraph& g, VertexId u, VertexId v);

// Every maximal set satisfying (A1) pairwise separation and (A2) the
// subdivided-K4 branch condition, before any filtering. Sorted.
std::vector<VertexSet> maximal_separating_sets(const DefiningGraph& g);
std::vector<VertexSet> maximal_separating_sets(const DefiningGraph& g, const std::vector<SubdividedK4>& k4s);

// Maximal cliques (>= 2 triples) of the triple-crossing graph, as indices into `triples`.
std::vector<std::vector<int>> crossing_triple_cliques(const DefiningGraph& g, const std::vector<CutCollection>& triples);

bool generates_two_ended(const DefiningGraph& g, const VertexSet& s);

// TWO_ENDED_ANOMALY if a surviving pairwise-separating set is two-ended.
std::vector<HangingData> find_hanging_sets(const DefiningGraph& g, const std::vector<CylinderData>& cyls);

// CAP_EXCEEDED when the graph has more essential vertices than the cap.
std::vector<RigidData> find_rigid_sets(const DefiningGraph& g, std::size_t cap = kDefaultRigidCap);

// ASSUMPTIONS_FAILED unless level-3 valid.
GraphOfCylinders build_graph_of_cylinders(const DefiningGraph& g, const BuildOptions& opts = {});

// Structural invariants of a built graph of cylinders; empty when all hold.
std::vector<std::string> verify_graph_of_cylinders(const DefiningGraph& g, const GraphOfCylinders& goc);

// Green cylinders, red hanging, blue rigid.
std::string to_dot(const GraphOfCylinders& goc);

}  // namespace racg
