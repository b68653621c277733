#include "racg/cuts.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

#include "racg/error.hpp"

namespace racg {

VertexSet CutCollection::generators() const {
  if (kind == CollectionKind::Pair) return make_set({a, b});
  return make_set({a, b, mid});
}

bool operator<(const CutCollection& x, const CutCollection& y) {
  return std::tuple(x.kind, x.a, x.b, x.mid) < std::tuple(y.kind, y.a, y.b, y.mid);
}

std::string describe(const DefiningGraph& g, const CutCollection& c) {
  std::string s = "{" + g.name(c.a) + "," + g.name(c.b);
  if (c.kind == CollectionKind::Triple) s += "," + g.name(c.mid);
  return s + "}";
}

std::string_view to_string(CylinderClass k) {
  switch (k) {
    case CylinderClass::TwoEnded: return "2E";
    case CylinderClass::VA: return "VA";
    case CylinderClass::VFD: return "VFD";
  }
  return "?";
}

CylinderClass classify_cylinder(std::size_t common_adjacents) {
  if (common_adjacents <= 1) return CylinderClass::TwoEnded;
  if (common_adjacents == 2) return CylinderClass::VA;
  return CylinderClass::VFD;
}

namespace detail {

std::vector<CutCollection> enumerate_cut_pairs(const DefiningGraph& g) {
  std::vector<CutCollection> out;
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b)
      if (disconnects(g, {a, b})) out.push_back({CollectionKind::Pair, a, b, -1, g.fingerprint()});
  return out;
}

}  // namespace detail

std::vector<CutCollection> find_cut_pairs(const DefiningGraph& g) {
  auto out = detail::enumerate_cut_pairs(g);
  for ([[maybe_unused]] const auto& c : out) assert(!g.adjacent(c.a, c.b));
  return out;
}

std::vector<CutCollection> find_cut_triples(const DefiningGraph& g) {
  std::vector<CutCollection> out;
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b) {
      if (g.adjacent(a, b) || disconnects(g, {a, b})) continue;
      for (VertexId mid : set_intersection(g.neighbors(a), g.neighbors(b)))
        if (disconnects(g, make_set({a, b, mid})))
          out.push_back({CollectionKind::Triple, a, b, mid, g.fingerprint()});
    }
  return out;
}

bool crosses(const DefiningGraph& g, const CutCollection& x, const CutCollection& y) {
  if (x.graph != g.fingerprint() || y.graph != g.fingerprint())
    throw Error(ErrorCode::MixedGraph, "cut collections come from different graphs");
  if (x.kind != y.kind) return false;
  const VertexSet ys = y.generators();
  if (contains(ys, x.a) || contains(ys, x.b)) return false;
  if (x.kind == CollectionKind::Triple && x.mid != y.mid) return false;
  return !connected_after_removal(g, ys, x.a, x.b);
}

bool CrossingTable::is_crossed(std::size_t i) const {
  return std::any_of(crossed_by[i].begin(), crossed_by[i].end(), [](char c) { return c != 0; });
}

CrossingTable crossing_table(const DefiningGraph& g) {
  CrossingTable t;
  t.all = detail::enumerate_cut_pairs(g);
  auto triples = find_cut_triples(g);
  t.all.insert(t.all.end(), triples.begin(), triples.end());
  const std::size_t n = t.all.size();
  t.crossed_by.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) t.crossed_by[i][j] = crosses(g, t.all[i], t.all[j]) ? 1 : 0;
  return t;
}

std::vector<CutCollection> uncrossed_collections(const CrossingTable& table) {
  std::vector<CutCollection> out;
  for (std::size_t i = 0; i < table.all.size(); ++i)
    if (!table.is_crossed(i)) out.push_back(table.all[i]);
  return out;
}

std::vector<CutCollection> uncrossed_collections(const DefiningGraph& g) {
  auto out = uncrossed_collections(crossing_table(g));
  for ([[maybe_unused]] const auto& c : out)
    assert(c.kind != CollectionKind::Pair || (g.degree(c.a) >= 3 && g.degree(c.b) >= 3));
  return out;
}

CylinderData commensurator(const DefiningGraph& g, const CutCollection& x) {
  CylinderData d;
  d.collection = x;
  d.common_adjacents = set_intersection(g.neighbors(x.a), g.neighbors(x.b));
  d.klass = classify_cylinder(d.common_adjacents.size());
  d.vertex_set = set_union(make_set({x.a, x.b}), d.common_adjacents);
  return d;
}

std::vector<CylinderData> cylinders(const DefiningGraph& g) {
  std::vector<CylinderData> out;
  for (const auto& c : uncrossed_collections(g)) {
    CylinderData d = commensurator(g, c);
    bool dup = std::any_of(out.begin(), out.end(), [&](const CylinderData& e) { return e.vertex_set == d.vertex_set; });
    if (!dup) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace racg
