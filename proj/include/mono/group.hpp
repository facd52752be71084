#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mono/rational.hpp"

namespace mono {

/// Presentation of H = Z^free_rank (+) Z/q_1 (+) ... (+) Z/q_s.
struct GroupDescriptor {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion_moduli;

  /// Throws ShapeError unless every q_i >= 2 and rank + |moduli| >= 1.
  void validate() const;

  std::size_t dimension() const { return free_rank + torsion_moduli.size(); }
  bool is_finite() const { return free_rank == 0; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Element of H. Torsion coordinates are kept reduced into [0, q_i).
struct HElement {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;

  static HElement zero(const GroupDescriptor& g);

  bool is_zero() const;
  /// Largest |free coordinate|; torsion coordinates are ignored.
  std::int64_t free_sup_norm() const;

  friend bool operator==(const HElement&, const HElement&) = default;
  friend auto operator<=>(const HElement&, const HElement&) = default;
};

/// Element h (+) c^k of H (+) C.
struct ExtElement {
  HElement h;
  BigInt k;

  static ExtElement zero(const GroupDescriptor& g) { return {HElement::zero(g), BigInt(0)}; }
  bool is_zero() const { return k == 0 && h.is_zero(); }

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.k == b.k && a.h == b.h;
  }
};

/// Throws ShapeError if `h` has the wrong arity or unreduced torsion coordinates.
void check_conforms(const GroupDescriptor& g, const HElement& h);

HElement combine(const GroupDescriptor& g, const HElement& a, const HElement& b, int sign = +1);
HElement negate(const GroupDescriptor& g, const HElement& a);
HElement scale(const GroupDescriptor& g, const HElement& a, std::int64_t factor);

/// a + sign * b in H (+) C.
ExtElement elem_combine(const GroupDescriptor& g, const ExtElement& a, const ExtElement& b,
                        int sign = +1);
ExtElement negate(const GroupDescriptor& g, const ExtElement& a);

/// Zigzag code 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
std::uint64_t zigzag_encode(std::int64_t x);
std::int64_t zigzag_decode(std::uint64_t code);

/// h_n, 1-based: graded-lexicographic order over (zigzag(free), torsion) code tuples.
HElement enumerate_h(const GroupDescriptor& g, std::uint64_t n);

/// Inverse of enumerate_h.
std::uint64_t index_of(const GroupDescriptor& g, const HElement& h);

/// Number of elements whose code tuple sums to at most 2 * radius. Every such element
/// has |free coordinate| <= radius, so indices 1..bound stay inside that ball.
std::uint64_t index_bound_for_radius(const GroupDescriptor& g, std::uint64_t radius);

/// |H| when finite, 0 otherwise.
std::uint64_t group_order(const GroupDescriptor& g);

std::string to_string(const HElement& h);

}  // namespace mono
