#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mono/group.hpp"
#include "mono/norm.hpp"
#include "mono/rational.hpp"

namespace mono {

struct PairIndex {
  std::uint64_t m = 0;  // target index into the enumeration of H
  std::uint64_t j = 0;  // precision index, anchor value 1/j
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// n-th pair of N x N in anti-diagonal order: (1,1), (1,2), (2,1), (1,3), (2,2), (3,1), ...
PairIndex pair_index(std::uint64_t n);
/// Inverse of pair_index: (m+j-1)(m+j-2)/2 + m.
std::uint64_t unpair_index(std::uint64_t m, std::uint64_t j);

/// Powers k_1..k_N and thresholds delta_1..delta_N (0-based storage).
/// k_1 = 1, delta_1 = 1; delta_n = min_{i<n} 1/j_i and k_n = floor(k_{n-1}/delta_n) + 1.
struct KSequence {
  std::vector<BigInt> k;
  std::vector<Rational> delta;
};

KSequence k_sequence(std::size_t count);

/// Smallest n with k_n >= bound.
std::size_t depth_reaching(const BigInt& bound);

/// a_n = c^{k_n} - h_m with D'(a_n) = D'(-a_n) = 1/j. For finite H, m is read modulo |H|.
struct Anchor {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t j = 0;
  BigInt k;
  HElement target;
  Rational value;
};

/// State of the inductive construction up to a finite depth. Immutable once built.
class AnchorTable {
 public:
  const GroupDescriptor& descriptor() const { return descriptor_; }
  const NormSpec& spec() const { return spec_; }
  std::size_t depth() const { return anchors_.size(); }

  const std::vector<Anchor>& anchors() const { return anchors_; }
  /// 1-based.
  const Anchor& anchor(std::size_t n) const { return anchors_.at(n - 1); }
  const std::vector<Rational>& deltas() const { return deltas_; }

  /// c^{k_n} - h_{m}.
  ExtElement anchor_element(std::size_t n) const;

  /// Assembles a table without re-deriving the recurrence. Used by the loader after its own
  /// checks, and by test fixtures that need deliberately broken tables.
  static AnchorTable from_parts_unchecked(GroupDescriptor descriptor, NormSpec spec,
                                          std::vector<Anchor> anchors,
                                          std::vector<Rational> deltas);

 private:
  AnchorTable() = default;

  GroupDescriptor descriptor_;
  NormSpec spec_;
  std::vector<Anchor> anchors_;
  std::vector<Rational> deltas_;
};

AnchorTable build_anchor_table(const GroupDescriptor& g, const NormSpec& spec, std::size_t depth);
/// Same, reusing precomputed powers; the table depth is seq.k.size().
AnchorTable build_anchor_table(const GroupDescriptor& g, const NormSpec& spec, const KSequence& seq);

/// D'(x) when x lies in H or is plus/minus one of the table's anchors; nullopt otherwise.
std::optional<Rational> partial_norm_lookup(const AnchorTable& table, const ExtElement& x);

}  // namespace mono
