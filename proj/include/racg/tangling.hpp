#pragma once

#include <cstdint>
#include <vector>

#include "racg/compare.hpp"

namespace racg {

// Smallest d with (r-1)^d * y2 >= x1. DOMAIN unless r >= 3 and x1 >= y2 >= 1.
int slide_bound(std::uint64_t r, std::uint64_t x1, std::uint64_t y2);

struct SlideRecord {
  int origin_level = 0;
  int final_level = 0;  // for unsettled edges: the truncation level they sit at
  std::uint64_t count = 0;
};

struct LevelSummary {
  int level = 0;
  std::uint64_t vertices = 0;
  std::uint64_t min_load = 0;  // edges kept per vertex
  std::uint64_t max_load = 0;
  std::uint64_t passed_on = 0; // edges slid further from this level (or left unsettled at the last one)
  // At every vertex of the level, each kept edge has slid at least as far as each edge sent on.
  bool kept_furthest = true;
};

struct SlideTrace {
  std::uint64_t r = 0, x1 = 0, y2 = 0;
  int depth = 0;
  int bound = 0;
  int max_slide = 0;  // settled edges, and unsettled ones counted as one step past their level
  std::vector<SlideRecord> settled;
  std::vector<SlideRecord> unsettled;
  std::vector<LevelSummary> levels;  // 0..depth
};

// Runs the slide algorithm on one rooted (r-1)-ary subtree truncated at
// `depth`: every non-root vertex starts with x1 tangling edges, keeps the y2 that have
// slid furthest and deals the rest round-robin over its children (furthest
// first, one counter per vertex starting at child 0). DOMAIN as slide_bound,
// or when depth < slide_bound + 2.
SlideTrace simulate_slides(std::uint64_t r, std::uint64_t x1, std::uint64_t y2, int depth);

// z(2m+n)+j for z >= 0, (z+1)(2m+n)-j-1 for z < 0. DOMAIN unless 0 <= j < 2m+n.
std::int64_t line_bijection(std::int64_t m, std::int64_t n, std::int64_t z, std::int64_t j);

// (2 m1 + n1) / (2 m2 + n2), reduced. DOMAIN if the denominator is 0.
Rational scaling_factor(std::int64_t m1, std::int64_t n1, std::int64_t m2, std::int64_t n2);

}  // namespace racg
