#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "racg/invariant.hpp"
#include "racg/jsj.hpp"

namespace racg {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "p/q"

enum class QiResult { Yes, No, Inconclusive };
std::string_view to_string(QiResult r);  // QI_YES, QI_NO, INCONCLUSIVE

struct RatioEntry {
  std::string cylinder;            // VA class of the first input, e.g. "CYL:VA#0"
  std::string klass;               // neighbour class of the first input, e.g. "HANG:VF#1"
  std::optional<Rational> ratio;   // nullopt: DIVISION_UNDEFINED
};

struct Reason {
  std::string code;  // INVARIANT_MISMATCH, DENSITY_RATIO_MISMATCH, RIGID_PRESENT_UNMATCHED, TRIVIAL_JSJ
  std::string detail;
  std::vector<RatioEntry> ratios;
};

struct Verdict {
  QiResult result = QiResult::Inconclusive;
  std::vector<Reason> reasons;
  std::vector<std::pair<int, int>> beta;  // class of the first input -> class of the second
};

// Bijection between the classes of two invariants respecting ornaments,
// matrix entries and (when present) density vectors re-indexed by it.
std::optional<std::vector<int>> find_class_bijection(const StructureInvariant& x, const StructureInvariant& y);

Verdict compare(const GraphOfCylinders& x, const GraphOfCylinders& y);
// ASSUMPTIONS_FAILED if either graph fails level-3 validation.
Verdict compare(const DefiningGraph& x, const DefiningGraph& y, const BuildOptions& opts = {});

// Per VA class of `dx` and each neighbour class k: (2m+n on x) / (2m+n on y
// at beta(k)), using the first member of each class.
std::vector<RatioEntry> va_ratio_table(const GraphOfCylinders& x, const Decoration& dx, const GraphOfCylinders& y,
                                       const Decoration& dy, const std::vector<int>& beta);

struct CommensurabilityFinding {
  bool applicable = false;
  std::uint64_t i = 0, j = 0;          // free ranks |C| - 1, ordered i <= j
  std::uint64_t deg_v = 0, deg_v2 = 0; // quotient degrees of the VFD nodes (deg_v belongs to i)
  bool obstructed = false;
  std::string detail;
};

// j > 16 (i - 1) deg_v2 / deg_v + 1, exactly. Assumes deg_v > 0.
bool commensurability_inequality(std::uint64_t i, std::uint64_t deg_v, std::uint64_t j, std::uint64_t deg_v2);

CommensurabilityFinding commensurability_obstruction(const GraphOfCylinders& x, const GraphOfCylinders& y);

}  // namespace racg
