#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racg/jsj.hpp"

namespace racg {

// A natural number or infinity; infinity absorbs addition and sorts last.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Multiplicity infinite();

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const { return value_; }
  std::string to_string() const;  // decimal or "inf"

  Multiplicity& operator+=(const Multiplicity& o);
  friend Multiplicity operator+(Multiplicity a, const Multiplicity& b) { return a += b; }
  friend auto operator<=>(const Multiplicity&, const Multiplicity&) = default;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

struct Ornament {
  NodeKind kind = NodeKind::Cylinder;
  std::string qi_label;  // "2E", "VA", "VFD", "VF", or a rigid certificate

  std::string to_string() const;  // e.g. "CYL:VA"
  friend auto operator<=>(const Ornament&, const Ornament&) = default;
  friend bool operator==(const Ornament&, const Ornament&) = default;
};

// Coarse mode replaces every rigid certificate by the bare label "RIG".
enum class RigidDetail { Certificate, Coarse };

Ornament ornament(const GocNode& node, RigidDetail detail = RigidDetail::Certificate);

// Tree edges in the orbit of `edge` at a lift of `node`.
Multiplicity tree_multiplicity(const GraphOfCylinders& goc, int node, int edge);

struct SignatureEntry {
  int klass = 0;
  EdgeKind kind = EdgeKind::DInf;
  Multiplicity count;

  friend auto operator<=>(const SignatureEntry&, const SignatureEntry&) = default;
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

// Sorted by (klass, kind); zero entries omitted.
using Signature = std::vector<SignatureEntry>;

struct Decoration {
  std::vector<int> class_of;         // per node
  std::vector<Ornament> ornaments;   // per class: the initial ornament

  int class_count() const { return static_cast<int>(ornaments.size()); }
  std::vector<int> members(int klass) const;
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

Decoration initial_decoration(const GraphOfCylinders& goc, RigidDetail detail = RigidDetail::Certificate);

Signature signature(const GraphOfCylinders& goc, const Decoration& d, int node);

// One round: split every class by member signatures. Class ids are ranks of
// (previous class, signature), so the result does not depend on node order.
Decoration refine_once(const GraphOfCylinders& goc, const Decoration& d);

// All rounds, starting with `d` itself and ending at the fixpoint.
std::vector<Decoration> neighbor_refine_trace(const GraphOfCylinders& goc, const Decoration& d);
Decoration neighbor_refine(const GraphOfCylinders& goc, const Decoration& d);

bool is_stable(const GraphOfCylinders& goc, const Decoration& d);

// Normalised 2m+n counts per class for VA cylinders; nullopt (NONE) elsewhere.
using DensityVector = std::optional<std::vector<std::uint64_t>>;

DensityVector density_vector(const GraphOfCylinders& goc, const Decoration& d, int node);
// Raw 2m+n counts per class, before normalisation.
std::vector<std::uint64_t> raw_density(const GraphOfCylinders& goc, const Decoration& d, int node);

struct DensityRefinement {
  Decoration decoration;
  std::vector<DensityVector> density;  // per node
  std::vector<Decoration> trace;       // every intermediate decoration, in order
};

DensityRefinement density_refine(const GraphOfCylinders& goc, RigidDetail detail = RigidDetail::Certificate);

struct InvariantClass {
  Ornament ornament;
  DensityVector density;
  Signature signature;
  std::vector<int> nodes;
};

struct StructureInvariant {
  bool density_refined = false;
  std::vector<InvariantClass> classes;
  std::vector<std::vector<Multiplicity>> matrix;

  // Ignores node ids, which depend on the presentation.
  bool same_as(const StructureInvariant& other) const;
};

// NOT_STABLE unless d is a neighbour-refinement fixpoint. `density` may be
// empty, in which case no density data is recorded.
StructureInvariant structure_invariant(const GraphOfCylinders& goc, const Decoration& d,
                                       const std::vector<DensityVector>& density);

StructureInvariant compute_invariant(const GraphOfCylinders& goc, bool with_density,
                                     RigidDetail detail = RigidDetail::Certificate);

}  // namespace racg
