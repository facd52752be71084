#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mono/group.hpp"
#include "mono/rational.hpp"

namespace mono {

/// min(1, sum_i w_i |x_i| + sum_t cyc(t)).
struct CappedWeightedL1 {
  std::vector<Rational> weights;
  friend bool operator==(const CappedWeightedL1&, const CappedWeightedL1&) = default;
};

/// min(1, max(max_i |x_i| / scale, max_t cyc(t))).
struct CappedLInf {
  Rational scale;
  friend bool operator==(const CappedLInf&, const CappedLInf&) = default;
};

/// Torsion-only groups: min(1, sum_t cyc(t)), cyc(t) = min(t, q - t) * 2 / q.
struct CyclicScaled {
  friend bool operator==(const CyclicScaled&, const CyclicScaled&) = default;
};

/// Rank-1 pseudonorm: distance from x * alpha to the nearest integer.
struct RationalRotation {
  Rational alpha;
  friend bool operator==(const RationalRotation&, const RationalRotation&) = default;
};

struct NormSpec {
  std::variant<CappedWeightedL1, CappedLInf, CyclicScaled, RationalRotation> params;

  /// Wire tag: "capped_l1", "capped_linf", "cyclic_scaled", "rational_rotation".
  std::string type_name() const;
  /// True for variants that may vanish off zero.
  bool is_pseudonorm_variant() const { return std::holds_alternative<RationalRotation>(params); }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

/// Throws ShapeError when the spec does not fit the descriptor and DomainError on
/// non-positive weights or scale.
void validate_spec(const GroupDescriptor& g, const NormSpec& spec);

/// d(h). Throws ShapeError when `h` does not conform to `g`.
Rational base_norm(const GroupDescriptor& g, const NormSpec& spec, const HElement& h);

struct AxiomViolation {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::size_t samples = 0;
  std::vector<AxiomViolation> violations;
  /// Non-fatal findings, e.g. "pseudonorm: d([3])=0".
  std::vector<std::string> flags;
  bool pseudonorm = false;

  bool ok() const { return violations.empty(); }
};

/// Seeded sampled check of d(0) = 0, symmetry, subadditivity, 0 <= d <= 1, plus a scan for
/// nonzero elements of norm zero. Does not call validate_spec, so broken specs can be probed.
AxiomReport validate_norm_spec(const GroupDescriptor& g, const NormSpec& spec,
                               std::size_t sample_count, std::uint64_t seed);

}  // namespace mono
