#include "mono/evaluator.hpp"

#include <algorithm>

#include "mono/errors.hpp"
#include "mono/norm.hpp"
#include "parallel.hpp"

namespace mono {

namespace {

void check_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw DomainError("epsilon must lie in (0, 1), got " + epsilon.str());
  }
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Exact branch and bound over integer anchor multiplicities (m_cap, ..., m_1), visited in
// lexicographic order. A subtree is cut when
//   * the k-target left over cannot be met by the remaining anchors within their caps,
//   * cost so far + |leftover| / max_{i<n} k_i j_i exceeds the budget (each unit of anchor i
//     moves the c-power by k_i at cost 1/j_i), or
//   * that same lower bound already reaches the incumbent cost (ties keep the earlier,
//     lexicographically smaller vector).
class DecompositionSearch {
 public:
  DecompositionSearch(const AnchorTable& table, const ExtElement& x, Rational budget,
                      std::size_t index_cap)
      : table_(table), g_(table.descriptor()), x_(x), budget_(std::move(budget)), cap_n_(index_cap) {
    if (index_cap > table.depth()) {
      throw DomainError("index cap " + std::to_string(index_cap) + " exceeds table depth " +
                        std::to_string(table.depth()));
    }
    check_conforms(g_, x.h);
    caps_.assign(cap_n_ + 1, 0);
    unit_cost_.assign(cap_n_ + 1, Rational());
    reach_.assign(cap_n_ + 1, BigInt(0));
    rate_.assign(cap_n_ + 1, BigInt(0));
    for (std::size_t n = 1; n <= cap_n_; ++n) {
      const Anchor& a = table.anchor(n);
      const auto j = static_cast<long>(a.j);
      caps_[n] = (budget_ * Rational(j)).floor().get_si();
      unit_cost_[n] = Rational(1, j);
      reach_[n] = reach_[n - 1] + BigInt(caps_[n]) * a.k;
      rate_[n] = rate_[n - 1];
      if (caps_[n] > 0) rate_[n] = std::max(rate_[n], BigInt(a.k * j));
    }
    coeffs_.assign(cap_n_ + 1, 0);
  }

  std::optional<Decomposition> run() {
    descend(cap_n_, x_.k, Rational(), x_.h);
    return std::move(best_);
  }

 private:
  void descend(std::size_t n, const BigInt& remaining, const Rational& cost, const HElement& h) {
    if (n == 0) {
      if (remaining != 0) return;
      const Rational total = cost + base_norm(g_, table_.spec(), h);
      if (total > budget_) return;
      if (best_ && total >= best_->cost) return;
      Decomposition d;
      for (std::size_t i = 1; i <= cap_n_; ++i) {
        if (coeffs_[i] != 0) d.coefficients.emplace(i, coeffs_[i]);
      }
      d.residual = h;
      d.cost = total;
      best_ = std::move(d);
      return;
    }
    const Anchor& a = table_.anchor(n);
    const BigInt& below_reach = reach_[n - 1];
    // |remaining - m k_n| <= below_reach
    const BigInt lo_big = std::max(BigInt(-caps_[n]), ceil_div(remaining - below_reach, a.k));
    const BigInt hi_big = std::min(BigInt(caps_[n]), floor_div(remaining + below_reach, a.k));
    if (lo_big > hi_big) return;
    const std::int64_t lo = lo_big.get_si();
    const std::int64_t hi = hi_big.get_si();
    for (std::int64_t m = lo; m <= hi; ++m) {
      const Rational next_cost = cost + unit_cost_[n] * Rational(m < 0 ? -m : m);
      if (next_cost > budget_) continue;
      const BigInt next_remaining = remaining - BigInt(m) * a.k;
      Rational bound = next_cost;
      if (next_remaining != 0) {
        if (rate_[n - 1] == 0) continue;
        bound += Rational(abs(next_remaining), rate_[n - 1]);
      }
      if (bound > budget_) continue;
      if (best_ && bound >= best_->cost) continue;
      coeffs_[n] = m;
      if (m == 0) {
        descend(n - 1, next_remaining, next_cost, h);
      } else {
        descend(n - 1, next_remaining, next_cost, combine(g_, h, scale(g_, a.target, m)));
      }
      coeffs_[n] = 0;
    }
  }

  const AnchorTable& table_;
  const GroupDescriptor& g_;
  const ExtElement& x_;
  Rational budget_;
  std::size_t cap_n_;
  std::vector<std::int64_t> caps_;
  std::vector<Rational> unit_cost_;
  std::vector<BigInt> reach_;  // sum_{i<=n} cap_i k_i
  std::vector<BigInt> rate_;   // max_{i<=n, cap_i>0} k_i j_i
  std::vector<std::int64_t> coeffs_;
  std::optional<Decomposition> best_;
};

}  // namespace

std::size_t truncation_index(const AnchorTable& table, const BigInt& k, const Rational& t) {
  if (t.sign() <= 0 || t >= Rational(1)) {
    throw DomainError("budget t must lie in (0, 1), got " + t.str());
  }
  if (k == 0) return 0;
  const Rational threshold = Rational(abs(k)) / (Rational(1) - t);
  for (std::size_t n = 1; n <= table.depth(); ++n) {
    if (Rational(table.anchor(n).k) >= threshold) return n;
  }
  const BigInt needed = (threshold.numerator() + threshold.denominator() - 1) / threshold.denominator();
  throw ExtendTableError(depth_reaching(needed), table.depth());
}

std::optional<Decomposition> best_decomposition(const AnchorTable& table, const ExtElement& x,
                                                const Rational& t, std::size_t index_cap) {
  return DecompositionSearch(table, x, t, index_cap).run();
}

EvalResult evaluate(const AnchorTable& table, const ExtElement& x, const Rational& epsilon) {
  check_epsilon(epsilon);
  const GroupDescriptor& g = table.descriptor();
  check_conforms(g, x.h);
  if (x.k == 0) {
    return {EvalResult::Kind::exact, base_norm(g, table.spec(), x.h), std::nullopt, 0};
  }
  const Rational t = Rational(1) - epsilon;
  const std::size_t level = truncation_index(table, x.k, t);
  auto witness = best_decomposition(table, x, t, level);
  if (witness) {
    Rational value = witness->cost;
    return {EvalResult::Kind::exact, std::move(value), std::move(witness), level};
  }
  return {EvalResult::Kind::interval, t, std::nullopt, level};
}

std::vector<EvalResult> evaluate_batch(const AnchorTable& table, std::span<const ExtElement> xs,
                                       const Rational& epsilon, Execution exec) {
  std::vector<EvalResult> out(xs.size());
  detail::for_each_index(xs.size(), exec, [&](std::size_t i) { out[i] = evaluate(table, xs[i], epsilon); });
  return out;
}

Rational evaluate_truncated(const AnchorTable& table, const ExtElement& x, std::size_t depth) {
  const auto best = DecompositionSearch(table, x, Rational(1), depth).run();
  return best ? min(Rational(1), best->cost) : Rational(1);
}

namespace {

struct DomainEntry {
  ExtElement element;
  Rational value;
};

class BruteForce {
 public:
  BruteForce(const AnchorTable& table, const ExtElement& x, std::size_t max_summands,
             std::int64_t radius)
      : g_(table.descriptor()), x_(x), max_summands_(max_summands) {
    add_h_elements(table, radius);
    for (std::size_t n = 1; n <= table.depth(); ++n) {
      const Anchor& a = table.anchor(n);
      if (a.k > radius || a.target.free_sup_norm() > radius) continue;
      const ExtElement e = table.anchor_element(n);
      domain_.push_back({e, a.value});
      domain_.push_back({negate(g_, e), a.value});
    }
  }

  Rational run() {
    if (x_.is_zero()) return Rational(0);
    best_ = Rational(1);
    extend(0, ExtElement::zero(g_), Rational(), 0);
    return best_;
  }

 private:
  void add_h_elements(const AnchorTable& table, std::int64_t radius) {
    const std::size_t dim = g_.dimension();
    std::vector<std::int64_t> lo(dim), hi(dim);
    for (std::size_t i = 0; i < g_.free_rank; ++i) {
      lo[i] = -radius;
      hi[i] = radius;
    }
    for (std::size_t i = 0; i < g_.torsion_moduli.size(); ++i) {
      lo[g_.free_rank + i] = 0;
      hi[g_.free_rank + i] = g_.torsion_moduli[i] - 1;
    }
    std::vector<std::int64_t> cur = lo;
    while (true) {
      HElement h{{cur.begin(), cur.begin() + static_cast<long>(g_.free_rank)},
                 {cur.begin() + static_cast<long>(g_.free_rank), cur.end()}};
      if (!h.is_zero()) {
        domain_.push_back({{h, BigInt(0)}, base_norm(g_, table.spec(), h)});
      }
      std::size_t p = 0;
      while (p < dim && cur[p] == hi[p]) {
        cur[p] = lo[p];
        ++p;
      }
      if (p == dim) break;
      ++cur[p];
    }
  }

  // Multisets as nondecreasing index sequences.
  void extend(std::size_t start, const ExtElement& sum, const Rational& cost, std::size_t used) {
    if (cost >= best_) return;
    if (used > 0 && sum == x_) {
      best_ = cost;
      return;
    }
    if (used == max_summands_) return;
    for (std::size_t i = start; i < domain_.size(); ++i) {
      extend(i, elem_combine(g_, sum, domain_[i].element), cost + domain_[i].value, used + 1);
    }
  }

  const GroupDescriptor& g_;
  const ExtElement& x_;
  std::size_t max_summands_;
  std::vector<DomainEntry> domain_;
  Rational best_;
};

}  // namespace

Rational brute_force_eval(const AnchorTable& table, const ExtElement& x, std::size_t max_summands,
                          std::int64_t radius) {
  check_conforms(table.descriptor(), x.h);
  return BruteForce(table, x, max_summands, radius).run();
}

bool witness_fits(const AnchorTable& table, const Decomposition& witness,
                  std::size_t max_summands, std::int64_t radius) {
  std::size_t summands = witness.residual.is_zero() ? 0 : 1;
  if (witness.residual.free_sup_norm() > radius) return false;
  for (const auto& [n, m] : witness.coefficients) {
    const Anchor& a = table.anchor(n);
    if (a.k > radius || a.target.free_sup_norm() > radius) return false;
    summands += static_cast<std::size_t>(m < 0 ? -m : m);
  }
  return summands <= max_summands;
}

DensityWitness density_witness(const AnchorTable& table, std::uint64_t m, std::uint64_t j,
                               const Rational& epsilon) {
  const std::uint64_t n = unpair_index(m, j);
  if (n > table.depth()) throw ExtendTableError(n, table.depth());
  const Anchor& a = table.anchor(n);
  DensityWitness w;
  w.n = n;
  w.power = a.k;
  w.bound = Rational(1, static_cast<long>(j));
  w.certified = evaluate(table, table.anchor_element(n), epsilon);
  w.holds = a.m == m && a.j == j && w.certified.upper() <= w.bound;
  return w;
}

std::vector<AnchorTable> extend_family(const GroupDescriptor& g, const std::vector<NormSpec>& specs,
                                       std::size_t depth) {
  for (const auto& spec : specs) validate_spec(g, spec);
  const KSequence shared = k_sequence(depth);
  std::vector<AnchorTable> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(build_anchor_table(g, spec, shared));
  return out;
}

}  // namespace mono
