#include "racg/jsj.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "racg/canonical.hpp"
#include "racg/error.hpp"
#include "racg/validate.hpp"

namespace racg {

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Cylinder: return "CYLINDER";
    case NodeKind::Hanging: return "HANGING";
    case NodeKind::Rigid: return "RIGID";
  }
  return "?";
}

std::string_view to_string(HangingSource s) {
  return s == HangingSource::PairwiseSeparating ? "PAIRWISE_SEP" : "CROSSING_TRIPLES";
}

std::string_view to_string(EdgeKind k) { return k == EdgeKind::DInf ? "DINF" : "DINF_X_Z2"; }

std::vector<int> GraphOfCylinders::incident(int node) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].cyl == node || edges[i].other == node) out.push_back(i);
  return out;
}

int GraphOfCylinders::count(NodeKind kind) const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [kind](const GocNode& n) { return n.kind == kind; }));
}

std::size_t rigid_cap_from_env() {
  const char* s = std::getenv("RACG_RIGID_CAP");
  if (s == nullptr || *s == '\0') return kDefaultRigidCap;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (*end != '\0' || v <= 0) return kDefaultRigidCap;
  return static_cast<std::size_t>(v);
}

bool pairwise_separates(const DefiningGraph& g, VertexId u, VertexId v) {
  return g.adjacent(u, v) || disconnects(g, make_set({u, v}));
}

namespace {

// Bron-Kerbosch with pivoting over an adjacency matrix; cliques come out sorted.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<int> c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* pool : {&p, &x})
    for (int u : *pool) {
      std::size_t k = std::count_if(p.begin(), p.end(), [&](int w) { return adj[u][w] != 0; });
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
  std::vector<int> candidates;
  for (int v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[v][w]) np.push_back(w);
    for (int w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<char>>& adj) {
  std::vector<std::vector<int>> out;
  std::vector<int> r, p;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) p.push_back(v);
  bron_kerbosch(adj, r, p, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Incremental (A1)+(A2) feasibility: each subdivided K4 stores, per vertex,
// the 6-bit mask of branches (with endpoints) the vertex lies on.
class SeparatingFamily {
 public:
  SeparatingFamily(const DefiningGraph& g, const std::vector<SubdividedK4>& k4s) : n_(g.size()) {
    sep_.assign(n_, std::vector<char>(n_, 0));
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = u + 1; v < n_; ++v) sep_[u][v] = sep_[v][u] = pairwise_separates(g, u, v) ? 1 : 0;
    masks_.reserve(k4s.size());
    through_.assign(n_, {});
    for (const auto& k : k4s) {
      std::vector<std::uint8_t> m(n_, 0);
      for (int b = 0; b < 6; ++b)
        for (VertexId v : k.branches[b]) m[v] |= static_cast<std::uint8_t>(1u << b);
      for (VertexId v = 0; v < n_; ++v)
        if (m[v]) through_[v].push_back(static_cast<int>(masks_.size()));
      masks_.push_back(std::move(m));
    }
  }

  int size() const { return n_; }

  bool extends(const std::vector<VertexId>& r, VertexId w) const {
    for (VertexId u : r)
      if (!sep_[u][w]) return false;
    for (int k : through_[w]) {
      const auto& m = masks_[k];
      int inside = 1;
      std::uint8_t common = m[w];
      for (VertexId u : r)
        if (m[u]) {
          ++inside;
          common &= m[u];
        }
      if (inside > 2 && common == 0) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<char>> sep_;
  std::vector<std::vector<std::uint8_t>> masks_;
  std::vector<std::vector<int>> through_;
};

// Maximal members of a hereditary family, Bron-Kerbosch style without pivot.
void enumerate_maximal(const SeparatingFamily& fam, std::vector<VertexId>& r, std::vector<VertexId> p,
                       std::vector<VertexId> x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(make_set(r));
    return;
  }
  while (!p.empty()) {
    VertexId v = p.front();
    p.erase(p.begin());
    r.push_back(v);
    std::vector<VertexId> np, nx;
    for (VertexId w : p)
      if (fam.extends(r, w)) np.push_back(w);
    for (VertexId w : x)
      if (fam.extends(r, w)) nx.push_back(w);
    enumerate_maximal(fam, r, std::move(np), std::move(nx), out);
    r.pop_back();
    x.push_back(v);
  }
}

bool induced_complete(const DefiningGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool inside_some_cylinder(const VertexSet& s, const std::vector<CylinderData>& cyls) {
  return std::any_of(cyls.begin(), cyls.end(), [&](const CylinderData& c) { return is_subset(s, c.vertex_set); });
}

std::string names_joined(const DefiningGraph& g, const VertexSet& s) {
  std::string out;
  for (VertexId v : s) out += (out.empty() ? "" : ",") + g.name(v);
  return "{" + out + "}";
}

}  // namespace

std::vector<VertexSet> maximal_separating_sets(const DefiningGraph& g, const std::vector<SubdividedK4>& k4s) {
  SeparatingFamily fam(g, k4s);
  std::vector<VertexSet> out;
  std::vector<VertexId> r, p;
  for (VertexId v = 0; v < g.size(); ++v) p.push_back(v);
  if (!p.empty()) enumerate_maximal(fam, r, p, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_separating_sets(const DefiningGraph& g) {
  return maximal_separating_sets(g, subdivided_k4_list(g));
}

std::vector<std::vector<int>> crossing_triple_cliques(const DefiningGraph& g, const std::vector<CutCollection>& triples) {
  const int n = static_cast<int>(triples.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (crosses(g, triples[i], triples[j]) || crosses(g, triples[j], triples[i])) adj[i][j] = adj[j][i] = 1;
  std::vector<std::vector<int>> out;
  for (auto& c : maximal_cliques(adj))
    if (c.size() >= 2) out.push_back(std::move(c));
  return out;
}

bool generates_two_ended(const DefiningGraph& g, const VertexSet& s) {
  // Triangle-free: D_inf is two non-adjacent vertices, D_inf x Z2 adds one common neighbour.
  if (s.size() == 2) return !g.adjacent(s[0], s[1]);
  if (s.size() != 3) return false;
  for (int m = 0; m < 3; ++m) {
    VertexId c = s[m], a = s[(m + 1) % 3], b = s[(m + 2) % 3];
    if (g.adjacent(c, a) && g.adjacent(c, b) && !g.adjacent(a, b)) return true;
  }
  return false;
}

std::vector<HangingData> find_hanging_sets(const DefiningGraph& g, const std::vector<CylinderData>& cyls) {
  std::vector<HangingData> out;
  auto keep = [&](const VertexSet& s) {
    if (induced_complete(g, s) || inside_some_cylinder(s, cyls)) return false;
    return std::none_of(out.begin(), out.end(), [&](const HangingData& h) { return h.vertices == s; });
  };
  for (const auto& s : maximal_separating_sets(g)) {
    if (!keep(s)) continue;
    if (generates_two_ended(g, s))
      throw Error(ErrorCode::TwoEndedAnomaly, "maximal pairwise-separating set " + names_joined(g, s) +
                                                  " is two-ended but lies in no cylinder");
    out.push_back({s, HangingSource::PairwiseSeparating});
  }
  const auto triples = find_cut_triples(g);
  for (const auto& clique : crossing_triple_cliques(g, triples)) {
    VertexSet s;
    for (int i : clique) s = set_union(s, triples[i].generators());
    if (keep(s)) out.push_back({s, HangingSource::CrossingTriples});
  }
  return out;
}

std::vector<RigidData> find_rigid_sets(const DefiningGraph& g, std::size_t cap) {
  const VertexSet ev = essential_vertices(g);
  if (ev.size() > cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(ev.size()) + " essential vertices exceed the rigid cap of " +
                                            std::to_string(cap) + " (set RACG_RIGID_CAP to raise it)");
  if (ev.size() < 4) return {};

  std::vector<VertexSet> separators;
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      VertexSet c{ev[i], ev[j]};
      if (disconnects(g, c)) separators.push_back(c);
    }
  for (VertexId d : ev) {
    const auto& nb = g.neighbors(d);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!contains(ev, nb[i]) || !contains(ev, nb[j])) continue;
        VertexSet c = make_set({nb[i], d, nb[j]});
        if (disconnects(g, c)) separators.push_back(c);
      }
  }

  // (B1) is a pairwise condition: u,v may share B iff no separator splits them.
  const int m = static_cast<int>(ev.size());
  std::vector<std::vector<char>> together(m, std::vector<char>(m, 1));
  for (int i = 0; i < m; ++i) together[i][i] = 0;
  for (const auto& c : separators) {
    auto comps = components_after_removal(g, c);
    std::vector<int> comp_of(g.size(), -1);
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (VertexId v : comps[k]) comp_of[v] = static_cast<int>(k);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int ci = comp_of[ev[i]], cj = comp_of[ev[j]];
        if (ci >= 0 && cj >= 0 && ci != cj) together[i][j] = together[j][i] = 0;
      }
  }
  std::vector<RigidData> out;
  for (const auto& clique : maximal_cliques(together)) {
    if (clique.size() < 4) continue;
    VertexSet b;
    for (int i : clique) b.push_back(ev[i]);
    out.push_back({make_set(std::move(b))});
  }
  std::sort(out.begin(), out.end(), [](const RigidData& x, const RigidData& y) { return x.vertices < y.vertices; });
  return out;
}

namespace {

std::string rigid_label(const DefiningGraph& g, const GraphOfCylinders& goc, int node) {
  const VertexSet& b = goc.nodes[node].gens;
  const int n = static_cast<int>(b.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[i][j] = g.adjacent(b[i], b[j]) ? 1 : 0;
  std::vector<std::vector<int>> marks;
  for (int e : goc.incident(node)) {
    std::vector<int> mark;
    for (VertexId v : goc.edges[e].gens) mark.push_back(static_cast<int>(std::lower_bound(b.begin(), b.end(), v) - b.begin()));
    marks.push_back(std::move(mark));
  }
  return canonical_certificate(n, adj, marks);
}

}  // namespace

GraphOfCylinders build_graph_of_cylinders(const DefiningGraph& g, const BuildOptions& opts) {
  require_valid(g, 3);
  GraphOfCylinders goc;
  goc.generators = g.names();

  const auto cyls = cylinders(g);
  for (const auto& c : cyls) {
    GocNode n;
    n.kind = NodeKind::Cylinder;
    n.gens = c.vertex_set;
    n.klass = c.klass;
    n.collection = c.collection.generators();
    goc.nodes.push_back(std::move(n));
  }
  for (const auto& h : find_hanging_sets(g, cyls)) {
    GocNode n;
    n.kind = NodeKind::Hanging;
    n.gens = h.vertices;
    n.source = h.source;
    goc.nodes.push_back(std::move(n));
  }
  for (const auto& r : find_rigid_sets(g, opts.rigid_cap)) {
    GocNode n;
    n.kind = NodeKind::Rigid;
    n.gens = r.vertices;
    goc.nodes.push_back(std::move(n));
  }
  std::stable_sort(goc.nodes.begin(), goc.nodes.end(), [](const GocNode& x, const GocNode& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.gens < y.gens;
  });
  for (int i = 0; i < static_cast<int>(goc.nodes.size()); ++i) goc.nodes[i].id = i;

  for (const auto& y : goc.nodes) {
    if (y.kind != NodeKind::Cylinder) continue;
    for (const auto& z : goc.nodes) {
      if (z.kind == NodeKind::Cylinder || !is_subset(y.collection, z.gens)) continue;
      GocEdge e;
      e.cyl = y.id;
      e.other = z.id;
      e.gens = set_intersection(y.gens, z.gens);
      if (e.gens.size() > 3)
        throw Error(ErrorCode::NonTwoEndedEdge, "edge group " + names_joined(g, e.gens) + " is not two-ended");
      e.kind = e.gens.size() == 2 ? EdgeKind::DInf : EdgeKind::DInfXZ2;
      goc.edges.push_back(std::move(e));
    }
  }
  for (auto& n : goc.nodes)
    if (n.kind == NodeKind::Rigid) n.label = rigid_label(g, goc, n.id);
  return goc;
}

std::vector<std::string> verify_graph_of_cylinders(const DefiningGraph& g, const GraphOfCylinders& goc) {
  std::vector<std::string> bad;
  const auto k4s = subdivided_k4_list(g);
  for (const auto& e : goc.edges) {
    const auto& y = goc.nodes.at(e.cyl);
    const auto& z = goc.nodes.at(e.other);
    std::string tag = "edge " + std::to_string(e.cyl) + "-" + std::to_string(e.other);
    if (y.kind != NodeKind::Cylinder || z.kind == NodeKind::Cylinder) bad.push_back(tag + " is not cylinder-to-non-cylinder");
    if (e.gens != set_intersection(y.gens, z.gens)) bad.push_back(tag + " gens differ from the intersection");
    if (!is_subset(y.collection, e.gens)) bad.push_back(tag + " misses the cut collection");
    if (e.gens.size() != 2 && e.gens.size() != 3) bad.push_back(tag + " group is not two-ended");
    if ((e.gens.size() == 2) != (e.kind == EdgeKind::DInf)) bad.push_back(tag + " kind disagrees with size");
    if (e.gens.size() == 3) {
      bool corners = std::any_of(k4s.begin(), k4s.end(), [&](const SubdividedK4& k) {
        VertexSet c(k.corners.begin(), k.corners.end());
        return is_subset(e.gens, c);
      });
      if (!corners) bad.push_back(tag + " has three generators that are not corners of one subdivided K4");
    }
  }
  for (const auto& n : goc.nodes) {
    std::string tag = "node " + std::to_string(n.id);
    for (const auto& o : goc.nodes)
      if (o.id < n.id && o.kind == n.kind && o.gens == n.gens) bad.push_back(tag + " duplicates node " + std::to_string(o.id));
    if (n.kind != NodeKind::Hanging) continue;
    for (const auto& c : goc.nodes)
      if (c.kind == NodeKind::Cylinder && is_subset(n.gens, c.gens)) bad.push_back(tag + " lies inside a cylinder");
    // Acyclic induced subgraph: a forest has fewer edges than vertices per component.
    int edges = 0;
    for (std::size_t i = 0; i < n.gens.size(); ++i)
      for (std::size_t j = i + 1; j < n.gens.size(); ++j) edges += g.adjacent(n.gens[i], n.gens[j]);
    GraphBuilder sub;
    for (VertexId v : n.gens) sub.add_vertex(g.name(v));
    for (std::size_t i = 0; i < n.gens.size(); ++i)
      for (std::size_t j = i + 1; j < n.gens.size(); ++j)
        if (g.adjacent(n.gens[i], n.gens[j])) sub.add_edge(g.name(n.gens[i]), g.name(n.gens[j]));
    int comps = count_components_after_removal(sub.build(), {});
    if (edges != static_cast<int>(n.gens.size()) - comps) bad.push_back(tag + " induces a cycle");
    if (n.source == HangingSource::CrossingTriples) {
      bool star = false;
      for (VertexId c : n.gens) {
        int deg = 0;
        for (VertexId v : n.gens) deg += g.adjacent(c, v);
        if (deg == static_cast<int>(n.gens.size()) - 1 && edges == deg) star = true;
      }
      if (!star) bad.push_back(tag + " is not a star");
    }
  }
  return bad;
}

std::string to_dot(const GraphOfCylinders& goc) {
  auto label = [&](const VertexSet& s) {
    std::string out;
    for (VertexId v : s) out += (out.empty() ? "" : ",") + goc.generators.at(v);
    return out;
  };
  std::ostringstream out;
  out << "graph cylinders {\n";
  for (const auto& n : goc.nodes) {
    const char* colour = n.kind == NodeKind::Cylinder ? "green" : n.kind == NodeKind::Hanging ? "red" : "blue";
    out << "  n" << n.id << " [label=\"" << label(n.gens) << "\", color=" << colour << "];\n";
  }
  for (const auto& e : goc.edges)
    out << "  n" << e.cyl << " -- n" << e.other << " [label=\"" << label(e.gens) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace racg
