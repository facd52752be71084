#include "mono/construction.hpp"

#include <cmath>

#include "mono/errors.hpp"

namespace mono {

PairIndex pair_index(std::uint64_t n) {
  if (n < 1) throw DomainError("pair index must be >= 1");
  // Diagonal d holds the pairs with m + j = d + 1; it starts at index d(d-1)/2 + 1.
  auto d = static_cast<std::uint64_t>((1.0 + std::sqrt(8.0 * static_cast<double>(n))) / 2.0);
  while (d * (d - 1) / 2 >= n) --d;
  while ((d + 1) * d / 2 < n) ++d;
  const std::uint64_t m = n - d * (d - 1) / 2;
  return {m, d + 1 - m};
}

std::uint64_t unpair_index(std::uint64_t m, std::uint64_t j) {
  if (m < 1 || j < 1) throw DomainError("pair coordinates must be >= 1");
  const std::uint64_t s = m + j;
  return (s - 1) * (s - 2) / 2 + m;
}

KSequence k_sequence(std::size_t count) {
  if (count < 1) throw DomainError("k_sequence length must be >= 1");
  KSequence out;
  out.k.reserve(count);
  out.delta.reserve(count);
  out.k.emplace_back(1);
  out.delta.emplace_back(1);
  Rational delta(1);
  for (std::size_t n = 2; n <= count; ++n) {
    // delta_n folds in pi(n-1).
    delta = min(delta, Rational(1, static_cast<long>(pair_index(n - 1).j)));
    out.delta.push_back(delta);
    out.k.push_back((Rational(out.k.back()) / delta).floor() + 1);
  }
  return out;
}

std::size_t depth_reaching(const BigInt& bound) {
  if (bound <= 1) return 1;
  BigInt k = 1;
  std::uint64_t max_j = 1;
  std::size_t n = 1;
  while (k < bound) {
    max_j = std::max(max_j, pair_index(n).j);
    k = k * BigInt(static_cast<unsigned long>(max_j)) + 1;
    ++n;
  }
  return n;
}

ExtElement AnchorTable::anchor_element(std::size_t n) const {
  const Anchor& a = anchor(n);
  return {negate(descriptor_, a.target), a.k};
}

AnchorTable AnchorTable::from_parts_unchecked(GroupDescriptor descriptor, NormSpec spec,
                                              std::vector<Anchor> anchors,
                                              std::vector<Rational> deltas) {
  AnchorTable t;
  t.descriptor_ = std::move(descriptor);
  t.spec_ = std::move(spec);
  t.anchors_ = std::move(anchors);
  t.deltas_ = std::move(deltas);
  return t;
}

namespace {

// A finite H runs out of enumeration indices; its targets cycle through h_1..h_|H|.
HElement anchor_target(const GroupDescriptor& g, std::uint64_t m, std::uint64_t order) {
  if (order != 0) m = (m - 1) % order + 1;
  return enumerate_h(g, m);
}

}  // namespace

AnchorTable build_anchor_table(const GroupDescriptor& g, const NormSpec& spec, std::size_t depth) {
  validate_spec(g, spec);
  return build_anchor_table(g, spec, k_sequence(depth));
}

AnchorTable build_anchor_table(const GroupDescriptor& g, const NormSpec& spec, const KSequence& seq) {
  validate_spec(g, spec);
  const std::size_t depth = seq.k.size();
  const std::uint64_t order = group_order(g);
  std::vector<Anchor> anchors;
  anchors.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    const PairIndex p = pair_index(n);
    anchors.push_back({n, p.m, p.j, seq.k[n - 1], anchor_target(g, p.m, order),
                       Rational(1, static_cast<long>(p.j))});
  }
  return AnchorTable::from_parts_unchecked(g, spec, std::move(anchors), seq.delta);
}

std::optional<Rational> partial_norm_lookup(const AnchorTable& table, const ExtElement& x) {
  const GroupDescriptor& g = table.descriptor();
  check_conforms(g, x.h);
  if (x.k == 0) return base_norm(g, table.spec(), x.h);
  const BigInt power = abs(x.k);
  // x = c^{k_n} - h_m has h = -h_m; its negative has h = h_m.
  const HElement expected_target = x.k > 0 ? negate(g, x.h) : x.h;
  for (const Anchor& a : table.anchors()) {
    if (a.k == power && a.target == expected_target) return a.value;
  }
  return std::nullopt;
}

}  // namespace mono
