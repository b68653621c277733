#include "racg/compare.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "racg/validate.hpp"

namespace racg {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(QiResult r) {
  switch (r) {
    case QiResult::Yes: return "QI_YES";
    case QiResult::No: return "QI_NO";
    case QiResult::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<std::vector<int>> find_class_bijection(const StructureInvariant& x, const StructureInvariant& y) {
  const int n = static_cast<int>(x.classes.size());
  if (n != static_cast<int>(y.classes.size()) || x.density_refined != y.density_refined) return std::nullopt;

  auto dens = [](const StructureInvariant& inv, int j, int k) -> std::optional<std::uint64_t> {
    const auto& d = inv.classes[j].density;
    if (!d) return std::nullopt;
    return (*d)[k];
  };
  // Entries between j and k agree with those between bj and bk.
  auto agree = [&](int j, int k, int bj, int bk) {
    return x.matrix[j][k] == y.matrix[bj][bk] && x.matrix[k][j] == y.matrix[bk][bj] &&
           dens(x, j, k) == dens(y, bj, bk) && dens(x, k, j) == dens(y, bk, bj);
  };

  std::vector<int> beta(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> assign = [&](int j) {
    if (j == n) return true;
    for (int k = 0; k < n; ++k) {
      if (used[k] || x.classes[j].ornament != y.classes[k].ornament) continue;
      if (x.classes[j].density.has_value() != y.classes[k].density.has_value()) continue;
      if (!agree(j, j, k, k)) continue;
      bool ok = true;
      for (int j2 = 0; j2 < j && ok; ++j2) ok = agree(j, j2, k, beta[j2]);
      if (!ok) continue;
      beta[j] = k;
      used[k] = 1;
      if (assign(j + 1)) return true;
      used[k] = 0;
      beta[j] = -1;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return beta;
}

std::vector<RatioEntry> va_ratio_table(const GraphOfCylinders& x, const Decoration& dx, const GraphOfCylinders& y,
                                       const Decoration& dy, const std::vector<int>& beta) {
  std::vector<RatioEntry> out;
  auto label = [&](int c) { return dx.ornaments[c].to_string() + "#" + std::to_string(c); };
  for (int j = 0; j < dx.class_count(); ++j) {
    const Ornament& o = dx.ornaments[j];
    if (o.kind != NodeKind::Cylinder || o.qi_label != "VA") continue;
    auto mx = dx.members(j);
    auto my = dy.members(beta.at(j));
    if (mx.empty() || my.empty()) continue;
    auto rx = raw_density(x, dx, mx.front());
    auto ry = raw_density(y, dy, my.front());
    for (int k = 0; k < dx.class_count(); ++k) {
      std::uint64_t num = rx[k], den = ry[beta.at(k)];
      if (num == 0 && den == 0) continue;
      RatioEntry e{label(j), label(k), std::nullopt};
      if (den != 0) e.ratio = Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
      out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> as_pairs(const std::vector<int>& beta) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < static_cast<int>(beta.size()); ++j) out.emplace_back(j, beta[j]);
  return out;
}

std::string mismatch_detail(const StructureInvariant& x, const StructureInvariant& y) {
  std::map<std::string, int> count;
  for (const auto& c : x.classes) ++count[c.ornament.to_string()];
  for (const auto& c : y.classes) --count[c.ornament.to_string()];
  for (const auto& [o, k] : count)
    if (k != 0)
      return "ornament " + o + " has " + std::to_string(k > 0 ? k : -k) + " more stable class(es) in the " +
             (k > 0 ? "first" : "second") + " input";
  return "no class bijection preserves the structure-invariant matrix";
}

}  // namespace

Verdict compare(const GraphOfCylinders& x, const GraphOfCylinders& y) {
  Verdict v;
  if (x.nodes.size() == 1 || y.nodes.size() == 1) {
    // A lone cylinder is the whole group; equal VA or VFD types are QI.
    bool same = x.nodes.size() == 1 && y.nodes.size() == 1 && x.nodes[0].kind == NodeKind::Cylinder &&
                y.nodes[0].kind == NodeKind::Cylinder && x.nodes[0].klass == y.nodes[0].klass &&
                x.nodes[0].klass != CylinderClass::TwoEnded;
    if (same) {
      v.result = QiResult::Yes;
      v.beta = {{0, 0}};
    } else {
      v.result = QiResult::Inconclusive;
      v.reasons.push_back({"TRIVIAL_JSJ", "a graph of cylinders with a single vertex is outside the classification", {}});
    }
    return v;
  }

  auto fx = compute_invariant(x, true);
  auto fy = compute_invariant(y, true);
  if (auto beta = find_class_bijection(fx, fy)) {
    v.result = QiResult::Yes;
    v.beta = as_pairs(*beta);
    return v;
  }

  auto cx = compute_invariant(x, true, RigidDetail::Coarse);
  auto cy = compute_invariant(y, true, RigidDetail::Coarse);
  if (auto beta = find_class_bijection(cx, cy)) {
    v.result = QiResult::Inconclusive;
    v.beta = as_pairs(*beta);
    v.reasons.push_back({"RIGID_PRESENT_UNMATCHED",
                         "invariants agree once rigid certificates are ignored, but matched rigid classes differ", {}});
    return v;
  }

  v.result = QiResult::No;
  Decoration nx = neighbor_refine(x, initial_decoration(x, RigidDetail::Coarse));
  Decoration ny = neighbor_refine(y, initial_decoration(y, RigidDetail::Coarse));
  auto sx = structure_invariant(x, nx, {});
  auto sy = structure_invariant(y, ny, {});
  if (auto beta = find_class_bijection(sx, sy)) {
    Reason r{"DENSITY_RATIO_MISMATCH", "", va_ratio_table(x, nx, y, ny, *beta)};
    std::string list;
    for (const auto& e : r.ratios) list += (list.empty() ? "" : ", ") + (e.ratio ? to_string(*e.ratio) : "undefined");
    r.detail = "neighbour counts at VA cylinders are not proportional (ratios " + list + ")";
    v.reasons.push_back(std::move(r));
  } else {
    v.reasons.push_back({"INVARIANT_MISMATCH", mismatch_detail(sx, sy), {}});
  }
  return v;
}

Verdict compare(const DefiningGraph& x, const DefiningGraph& y, const BuildOptions& opts) {
  return compare(build_graph_of_cylinders(x, opts), build_graph_of_cylinders(y, opts));
}

bool commensurability_inequality(std::uint64_t i, std::uint64_t deg_v, std::uint64_t j, std::uint64_t deg_v2) {
  Rational bound = Rational(16 * (static_cast<std::int64_t>(i) - 1) * static_cast<std::int64_t>(deg_v2),
                            static_cast<std::int64_t>(deg_v)) + 1;
  return Rational(static_cast<std::int64_t>(j)) > bound;
}

CommensurabilityFinding commensurability_obstruction(const GraphOfCylinders& x, const GraphOfCylinders& y) {
  CommensurabilityFinding f;
  auto single_vfd = [](const GraphOfCylinders& g) -> int {
    int found = -1;
    for (const auto& n : g.nodes)
      if (n.kind == NodeKind::Cylinder && n.klass == CylinderClass::VFD) {
        if (found >= 0) return -2;
        found = n.id;
      }
    return found;
  };
  int vx = single_vfd(x), vy = single_vfd(y);
  if (vx < 0 || vy < 0) {
    f.detail = "each input needs exactly one VFD cylinder";
    return f;
  }
  std::uint64_t ix = x.nodes[vx].gens.size() - 3, iy = y.nodes[vy].gens.size() - 3;
  std::uint64_t dx = x.incident(vx).size(), dy = y.incident(vy).size();
  if (dx == 0 || dy == 0) {
    f.detail = "a VFD cylinder has no incident edge";
    return f;
  }
  f.applicable = true;
  if (ix <= iy) {
    f.i = ix, f.deg_v = dx, f.j = iy, f.deg_v2 = dy;
  } else {
    f.i = iy, f.deg_v = dy, f.j = ix, f.deg_v2 = dx;
  }
  f.obstructed = commensurability_inequality(f.i, f.deg_v, f.j, f.deg_v2);
  f.detail = "j = " + std::to_string(f.j) + (f.obstructed ? " > " : " <= ") + "16(i-1)deg'/deg + 1 = " +
             to_string(Rational(16 * (static_cast<std::int64_t>(f.i) - 1) * static_cast<std::int64_t>(f.deg_v2),
                                static_cast<std::int64_t>(f.deg_v)) + 1);
  return f;
}

}  // namespace racg
