#include "racg/validate.hpp"

#include "racg/cuts.hpp"

namespace racg {

const CheckResult* AssumptionReport::check(int id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::vector<std::string> all_names(const DefiningGraph& g) { return g.names(); }

CheckResult triangle_free(const DefiningGraph& g) {
  CheckResult r{1, "triangle-free", true, {}, ""};
  for (auto [u, v] : g.edges())
    for (VertexId w : set_intersection(g.neighbors(u), g.neighbors(v))) {
      r.passed = false;
      r.witness = {g.names_of(make_set({u, v, w}))};
      r.detail = "triangle";
      return r;
    }
  return r;
}

CheckResult no_cut_vertex_or_edge(const DefiningGraph& g) {
  CheckResult r{2, "connected, no separating vertex or edge", true, {}, ""};
  auto comps = components_after_removal(g, {});
  if (comps.size() != 1) {
    r.passed = false;
    r.detail = comps.empty() ? "empty graph" : "disconnected";
    for (const auto& c : comps) r.witness.push_back(g.names_of(c));
    if (r.witness.empty()) r.witness.push_back({});
    return r;
  }
  for (VertexId v = 0; v < g.size(); ++v)
    if (disconnects(g, {v})) {
      r.passed = false;
      r.detail = "separating vertex";
      r.witness = {{g.name(v)}};
      return r;
    }
  for (auto [u, v] : g.edges())
    if (disconnects(g, {u, v})) {
      r.passed = false;
      r.detail = "separating edge";
      r.witness = {{g.name(u), g.name(v)}};
      return r;
    }
  return r;
}

CheckResult has_cut_collection(const DefiningGraph& g) {
  CheckResult r{3, "has a cut pair or cut triple", true, {}, ""};
  if (detail::enumerate_cut_pairs(g).empty() && find_cut_triples(g).empty()) {
    r.passed = false;
    r.detail = "no cut pair and no cut triple";
    r.witness = {all_names(g)};
  }
  return r;
}

CheckResult not_a_cycle(const DefiningGraph& g) {
  CheckResult r{4, "not a cycle", true, {}, ""};
  bool cycle = g.size() >= 3 && count_components_after_removal(g, {}) == 1;
  for (VertexId v = 0; cycle && v < g.size(); ++v) cycle = g.degree(v) == 2;
  if (cycle) {
    r.passed = false;
    r.detail = "is a cycle";
    r.witness = {all_names(g)};
  }
  return r;
}

CheckResult uncrossed_common_neighbours_split(const DefiningGraph& g) {
  CheckResult r{5, "common neighbours of uncrossed collections are separated", true, {}, ""};
  for (const auto& x : uncrossed_collections(crossing_table(g))) {
    const VertexSet pair = make_set({x.a, x.b});
    const VertexSet common = set_intersection(g.neighbors(x.a), g.neighbors(x.b));
    auto comps = components_after_removal(g, pair);
    std::vector<int> comp_of(g.size(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (VertexId v : comps[i]) comp_of[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (comp_of[common[i]] == comp_of[common[j]]) {
          r.passed = false;
          r.witness = {g.names_of(pair), g.names_of(make_set({common[i], common[j]}))};
          r.detail = "uncrossed " + describe(g, x) + ": " + g.name(common[i]) + " and " + g.name(common[j]) +
                     " are joined by a path avoiding " + g.name(x.a) + " and " + g.name(x.b);
          return r;
        }
  }
  return r;
}

}  // namespace

AssumptionReport validate(const DefiningGraph& g, int level) {
  AssumptionReport rep;
  rep.level = level;
  rep.checks.push_back(triangle_free(g));
  rep.checks.push_back(no_cut_vertex_or_edge(g));
  if (level >= 2) {
    rep.checks.push_back(has_cut_collection(g));
    rep.checks.push_back(not_a_cycle(g));
  }
  if (level >= 3) rep.checks.push_back(uncrossed_common_neighbours_split(g));
  for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
  return rep;
}

namespace {
std::string summarize(const AssumptionReport& rep) {
  std::string s = "standing assumptions (level " + std::to_string(rep.level) + ") failed:";
  for (const auto& c : rep.checks)
    if (!c.passed) s += " check " + std::to_string(c.id) + " (" + c.detail + ")";
  return s;
}
}  // namespace

AssumptionsFailed::AssumptionsFailed(AssumptionReport report)
    : Error(ErrorCode::AssumptionsFailed, summarize(report)), report_(std::move(report)) {}

void require_valid(const DefiningGraph& g, int level) {
  auto rep = validate(g, level);
  if (!rep.passed) throw AssumptionsFailed(std::move(rep));
}

}  // namespace racg
