#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mono/construction.hpp"
#include "mono/execution.hpp"
#include "mono/group.hpp"
#include "mono/rational.hpp"

namespace mono {

/// x = sum_n m_n a_n + residual, with cost sum_n |m_n|/j_n + d(residual).
struct Decomposition {
  std::map<std::size_t, std::int64_t> coefficients;
  HElement residual;
  Rational cost;

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.coefficients == b.coefficients && a.residual == b.residual && a.cost == b.cost;
  }
};

/// Certified value of D(x).
///   exact:    D(x) == value. witness is empty for elements of H ("H-only").
///   interval: D(x) in (value, 1].
struct EvalResult {
  enum class Kind { exact, interval };

  Kind kind = Kind::exact;
  Rational value;
  std::optional<Decomposition> witness;
  std::size_t truncation_level = 0;

  bool is_exact() const { return kind == Kind::exact; }
  /// Lower end of the certified range; equals value for exact results.
  const Rational& lower() const { return value; }
  Rational upper() const { return is_exact() ? value : Rational(1); }
};

inline constexpr long kDefaultEpsilonDenominator = 1024;
inline Rational default_epsilon() { return Rational(1, kDefaultEpsilonDenominator); }

/// Largest n such that n == 1 or k_{n-1} < |k|/(1-t); 0 when k == 0.
/// Any decomposition of an element with c-power k that uses an anchor beyond this index
/// costs more than t. Throws ExtendTableError when the table cannot pin the index down.
std::size_t truncation_index(const AnchorTable& table, const BigInt& k, const Rational& t);

/// Minimum-cost decomposition of x using anchors 1..index_cap with cost <= t, or nullopt.
/// Ties go to the lexicographically smallest (m_cap, ..., m_1).
std::optional<Decomposition> best_decomposition(const AnchorTable& table, const ExtElement& x,
                                                const Rational& t, std::size_t index_cap);

EvalResult evaluate(const AnchorTable& table, const ExtElement& x,
                    const Rational& epsilon = default_epsilon());

std::vector<EvalResult> evaluate_batch(const AnchorTable& table, std::span<const ExtElement> xs,
                                       const Rational& epsilon = default_epsilon(),
                                       Execution exec = Execution::parallel);

/// D_N(x): min(1, cheapest decomposition using anchors 1..N), not certified against deeper
/// anchors.
Rational evaluate_truncated(const AnchorTable& table, const ExtElement& x, std::size_t depth);

/// Exhaustive minimum of sum D'(x_i) over multisets of at most `max_summands` elements of
/// dom(D') summing to x. Domain elements are restricted to |free coordinate| <= radius and,
/// for anchors, k_n <= radius. Capped at 1. Test oracle only: does not canonicalize.
Rational brute_force_eval(const AnchorTable& table, const ExtElement& x, std::size_t max_summands,
                          std::int64_t radius);

/// Whether brute_force_eval(L = max_summands, R = radius) can see this decomposition.
bool witness_fits(const AnchorTable& table, const Decomposition& witness,
                  std::size_t max_summands, std::int64_t radius);

struct DensityWitness {
  std::size_t n = 0;
  BigInt power;
  Rational bound;
  EvalResult certified;
  /// certified upper end <= bound.
  bool holds = false;
};

/// Certifies D(c^{k_n} - h_m) <= 1/j for n = unpair_index(m, j).
DensityWitness density_witness(const AnchorTable& table, std::uint64_t m, std::uint64_t j,
                               const Rational& epsilon = default_epsilon());

/// One table per spec, all sharing pi, delta and k.
std::vector<AnchorTable> extend_family(const GroupDescriptor& g, const std::vector<NormSpec>& specs,
                                       std::size_t depth);

}  // namespace mono
