#include "racg/tangling.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "racg/error.hpp"

namespace racg {

int slide_bound(std::uint64_t r, std::uint64_t x1, std::uint64_t y2) {
  if (r < 3) throw Error(ErrorCode::Domain, "tree regularity r must be at least 3");
  if (y2 < 1) throw Error(ErrorCode::Domain, "y2 must be at least 1");
  if (x1 < y2) throw Error(ErrorCode::Domain, "x1 must be at least y2");
  int d = 0;
  for (std::uint64_t reach = y2; reach < x1; reach *= r - 1) ++d;
  return d;
}

namespace {

// Incoming edges of a vertex, indexed by how far they have already slid.
using Incoming = std::vector<std::uint64_t>;

void trim(Incoming& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

}  // namespace

SlideTrace simulate_slides(std::uint64_t r, std::uint64_t x1, std::uint64_t y2, int depth) {
  SlideTrace t;
  t.r = r, t.x1 = x1, t.y2 = y2, t.depth = depth;
  t.bound = slide_bound(r, x1, y2);
  if (depth < t.bound + 2) throw Error(ErrorCode::Domain, "depth must be at least slide_bound + 2");

  const std::uint64_t fan = r - 1;
  std::map<std::pair<int, int>, std::uint64_t> settled, unsettled;
  // Vertices of one level with equal incoming profiles behave identically.
  std::map<Incoming, std::uint64_t> level{{Incoming{}, 1}};

  for (int lv = 0; lv <= depth; ++lv) {
    LevelSummary sum;
    sum.level = lv;
    sum.min_load = std::numeric_limits<std::uint64_t>::max();
    std::map<Incoming, std::uint64_t> next;

    for (const auto& [in, mult] : level) {
      sum.vertices += mult;
      std::vector<std::pair<int, std::uint64_t>> groups;  // furthest first
      for (int d = static_cast<int>(in.size()) - 1; d >= 1; --d)
        if (in[d] > 0) groups.emplace_back(d, in[d]);
      if (lv > 0) groups.emplace_back(0, x1);  // the root carries none of its own

      std::uint64_t room = y2;
      int min_kept = std::numeric_limits<int>::max(), max_sent = -1;
      std::vector<std::pair<int, std::uint64_t>> surplus;
      for (auto [d, c] : groups) {
        std::uint64_t keep = std::min(c, room);
        room -= keep;
        if (keep > 0) {
          settled[{lv - d, lv}] += keep * mult;
          min_kept = std::min(min_kept, d);
          t.max_slide = std::max(t.max_slide, d);
        }
        if (c > keep) {
          surplus.emplace_back(d, c - keep);
          max_sent = std::max(max_sent, d);
        }
      }
      std::uint64_t load = y2 - room;
      sum.min_load = std::min(sum.min_load, load);
      sum.max_load = std::max(sum.max_load, load);
      if (min_kept != std::numeric_limits<int>::max() && max_sent > min_kept) sum.kept_furthest = false;
      for (auto [d, c] : surplus) sum.passed_on += c * mult;

      if (lv == depth) {
        for (auto [d, c] : surplus) {
          unsettled[{lv - d, lv}] += c * mult;
          t.max_slide = std::max(t.max_slide, d + 1);
        }
        continue;
      }
      std::vector<Incoming> kids(fan);
      std::uint64_t counter = 0;
      for (auto [d, c] : surplus) {
        std::uint64_t base = c / fan, extra = c % fan;
        for (std::uint64_t i = 0; i < fan; ++i) {
          auto& kid = kids[i];
          if (kid.size() < static_cast<std::size_t>(d + 2)) kid.resize(d + 2, 0);
          bool bonus = (i + fan - counter) % fan < extra;
          kid[d + 1] += base + (bonus ? 1 : 0);
        }
        counter = (counter + extra) % fan;
      }
      for (auto& kid : kids) {
        trim(kid);
        next[kid] += mult;
      }
    }
    t.levels.push_back(sum);
    level = std::move(next);
  }

  for (const auto& [k, c] : settled) t.settled.push_back({k.first, k.second, c});
  for (const auto& [k, c] : unsettled) t.unsettled.push_back({k.first, k.second, c});
  return t;
}

std::int64_t line_bijection(std::int64_t m, std::int64_t n, std::int64_t z, std::int64_t j) {
  const std::int64_t w = 2 * m + n;
  if (j < 0 || j >= w) throw Error(ErrorCode::Domain, "j must satisfy 0 <= j < 2m+n");
  return z >= 0 ? z * w + j : (z + 1) * w - j - 1;
}

Rational scaling_factor(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2) {
  const std::int64_t den = 2 * m2 + n2;
  if (den == 0) throw Error(ErrorCode::Domain, "2 m2 + n2 must be nonzero");
  return Rational(2 * m1 + n1, den);
}

}  // namespace racg
