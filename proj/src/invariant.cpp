#include "racg/invariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "racg/error.hpp"

namespace racg {

Multiplicity Multiplicity::infinite() {
  Multiplicity m;
  m.infinite_ = true;
  return m;
}

std::string Multiplicity::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

Multiplicity& Multiplicity::operator+=(const Multiplicity& o) {
  if (infinite_ || o.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += o.value_;
  }
  return *this;
}

std::string Ornament::to_string() const {
  const char* k = kind == NodeKind::Cylinder ? "CYL" : kind == NodeKind::Hanging ? "HANG" : "RIG";
  return std::string(k) + ":" + qi_label;
}

Ornament ornament(const GocNode& node, RigidDetail detail) {
  switch (node.kind) {
    case NodeKind::Cylinder: return {node.kind, std::string(to_string(node.klass))};
    case NodeKind::Hanging: return {node.kind, "VF"};
    case NodeKind::Rigid: return {node.kind, detail == RigidDetail::Coarse ? "RIG" : node.label};
  }
  return {};
}

Multiplicity tree_multiplicity(const GraphOfCylinders& goc, int node, int edge) {
  const GocNode& n = goc.nodes.at(node);
  const GocEdge& e = goc.edges.at(edge);
  if (n.kind != NodeKind::Cylinder || n.klass != CylinderClass::TwoEnded) return Multiplicity::infinite();
  // Index of a special subgroup W_E in a finite-by-two-ended W_Y is 2^|Y \ E|.
  std::size_t extra = n.gens.size() - set_intersection(n.gens, e.gens).size();
  return Multiplicity(std::uint64_t{1} << extra);
}

std::vector<int> Decoration::members(int klass) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(class_of.size()); ++v)
    if (class_of[v] == klass) out.push_back(v);
  return out;
}

Decoration initial_decoration(const GraphOfCylinders& goc, RigidDetail detail) {
  std::vector<Ornament> per_node;
  for (const auto& n : goc.nodes) per_node.push_back(ornament(n, detail));
  Decoration d;
  d.ornaments = per_node;
  std::sort(d.ornaments.begin(), d.ornaments.end());
  d.ornaments.erase(std::unique(d.ornaments.begin(), d.ornaments.end()), d.ornaments.end());
  for (const auto& o : per_node)
    d.class_of.push_back(static_cast<int>(std::lower_bound(d.ornaments.begin(), d.ornaments.end(), o) - d.ornaments.begin()));
  return d;
}

Signature signature(const GraphOfCylinders& goc, const Decoration& d, int node) {
  std::map<std::pair<int, EdgeKind>, Multiplicity> acc;
  for (int e : goc.incident(node)) {
    int w = goc.neighbor(goc.edges[e], node);
    acc[{d.class_of[w], goc.edges[e].kind}] += tree_multiplicity(goc, node, e);
  }
  Signature s;
  for (const auto& [key, count] : acc) s.push_back({key.first, key.second, count});
  return s;
}

namespace {

// Re-indexes nodes by the rank of their key; keys must start with the old class.
template <typename Key>
Decoration split_by(const Decoration& d, const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Decoration out;
  out.ornaments.resize(sorted.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    int c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    out.class_of.push_back(c);
    out.ornaments[c] = d.ornaments[d.class_of[v]];
  }
  return out;
}

}  // namespace

Decoration refine_once(const GraphOfCylinders& goc, const Decoration& d) {
  std::vector<std::pair<int, Signature>> keys;
  for (int v = 0; v < static_cast<int>(goc.nodes.size()); ++v) keys.emplace_back(d.class_of[v], signature(goc, d, v));
  return split_by(d, keys);
}

std::vector<Decoration> neighbor_refine_trace(const GraphOfCylinders& goc, const Decoration& d) {
  std::vector<Decoration> trace{d};
  while (true) {
    Decoration next = refine_once(goc, trace.back());
    if (next.class_count() == trace.back().class_count()) {
      // Same count means no class split; ids are unchanged as well.
      return trace;
    }
    trace.push_back(std::move(next));
  }
}

Decoration neighbor_refine(const GraphOfCylinders& goc, const Decoration& d) {
  return neighbor_refine_trace(goc, d).back();
}

bool is_stable(const GraphOfCylinders& goc, const Decoration& d) {
  std::map<int, Signature> seen;
  for (int v = 0; v < static_cast<int>(goc.nodes.size()); ++v) {
    Signature s = signature(goc, d, v);
    auto [it, fresh] = seen.emplace(d.class_of[v], s);
    if (!fresh && it->second != s) return false;
  }
  return true;
}

std::vector<std::uint64_t> raw_density(const GraphOfCylinders& goc, const Decoration& d, int node) {
  std::vector<std::uint64_t> v(d.class_count(), 0);
  for (int e : goc.incident(node)) {
    int w = goc.neighbor(goc.edges[e], node);
    v[d.class_of[w]] += goc.edges[e].kind == EdgeKind::DInf ? 2 : 1;
  }
  return v;
}

DensityVector density_vector(const GraphOfCylinders& goc, const Decoration& d, int node) {
  const GocNode& n = goc.nodes.at(node);
  if (n.kind != NodeKind::Cylinder || n.klass != CylinderClass::VA) return std::nullopt;
  auto v = raw_density(goc, d, node);
  std::uint64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

DensityRefinement density_refine(const GraphOfCylinders& goc, RigidDetail detail) {
  DensityRefinement r;
  r.trace = neighbor_refine_trace(goc, initial_decoration(goc, detail));
  const int n = static_cast<int>(goc.nodes.size());
  while (true) {
    const Decoration& stable = r.trace.back();
    std::vector<std::pair<int, DensityVector>> keys;
    for (int v = 0; v < n; ++v) keys.emplace_back(stable.class_of[v], density_vector(goc, stable, v));
    Decoration folded = split_by(stable, keys);
    if (folded.class_count() == stable.class_count()) break;
    auto more = neighbor_refine_trace(goc, folded);
    r.trace.insert(r.trace.end(), more.begin(), more.end());
  }
  r.decoration = r.trace.back();
  for (int v = 0; v < n; ++v) r.density.push_back(density_vector(goc, r.decoration, v));
  return r;
}

bool StructureInvariant::same_as(const StructureInvariant& o) const {
  if (density_refined != o.density_refined || matrix != o.matrix || classes.size() != o.classes.size()) return false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& x = classes[i];
    const auto& y = o.classes[i];
    if (x.ornament != y.ornament || x.density != y.density || x.signature != y.signature) return false;
  }
  return true;
}

StructureInvariant structure_invariant(const GraphOfCylinders& goc, const Decoration& d,
                                       const std::vector<DensityVector>& density) {
  if (!is_stable(goc, d)) throw Error(ErrorCode::NotStable, "decoration is not a neighbour-refinement fixpoint");
  StructureInvariant inv;
  inv.density_refined = !density.empty();
  const int k = d.class_count();
  inv.matrix.assign(k, std::vector<Multiplicity>(k, Multiplicity(0)));
  for (int c = 0; c < k; ++c) {
    InvariantClass cls;
    cls.ornament = d.ornaments[c];
    cls.nodes = d.members(c);
    if (!cls.nodes.empty()) {
      int rep = cls.nodes.front();
      cls.signature = signature(goc, d, rep);
      if (!density.empty()) cls.density = density.at(rep);
      for (const auto& e : cls.signature) inv.matrix[c][e.klass] += e.count;
    }
    inv.classes.push_back(std::move(cls));
  }
  return inv;
}

StructureInvariant compute_invariant(const GraphOfCylinders& goc, bool with_density, RigidDetail detail) {
  if (with_density) {
    auto r = density_refine(goc, detail);
    return structure_invariant(goc, r.decoration, r.density);
  }
  return structure_invariant(goc, neighbor_refine(goc, initial_decoration(goc, detail)), {});
}

}  // namespace racg
