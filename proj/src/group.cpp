#include "mono/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("coordinate overflow");
  return out;
}

std::int64_t reduce_mod(std::int64_t value, std::int64_t q) {
  const std::int64_t r = value % q;
  return r < 0 ? r + q : r;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > BigInt(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    throw DomainError("enumeration index exceeds 64 bits");
  }
  return std::stoull(v.get_str());
}

// Counts code tuples by coordinate sum. Positions [0, free_rank) are unbounded zigzag codes,
// the rest are torsion representatives bounded by q_i - 1.
class TupleCounter {
 public:
  explicit TupleCounter(const GroupDescriptor& g) : free_(g.free_rank), dim_(g.dimension()) {
    tails_.resize(dim_ - free_ + 1);
    tails_.back() = {BigInt(1)};
    for (std::size_t t = g.torsion_moduli.size(); t-- > 0;) {
      const auto& next = tails_[t + 1];
      const std::int64_t bound = g.torsion_moduli[t] - 1;
      std::vector<BigInt> cur(next.size() + static_cast<std::size_t>(bound), BigInt(0));
      for (std::size_t w = 0; w < next.size(); ++w) {
        for (std::int64_t v = 0; v <= bound; ++v) cur[w + static_cast<std::size_t>(v)] += next[w];
      }
      tails_[t] = std::move(cur);
    }
  }

  /// Tuples for positions [p, dim) summing to s.
  BigInt count(std::size_t p, std::uint64_t s) const {
    if (p >= free_) {
      const auto& tail = tails_[p - free_];
      return s < tail.size() ? tail[s] : BigInt(0);
    }
    const unsigned long a = free_ - p;
    const auto& tail = tails_.front();
    BigInt total = 0;
    const std::uint64_t wmax = std::min<std::uint64_t>(s, tail.size() - 1);
    for (std::uint64_t w = 0; w <= wmax; ++w) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), s - w + a - 1, a - 1);
      total += binom * tail[w];
    }
    return total;
  }

  /// Full tuples with coordinate sum <= s.
  BigInt count_upto(std::uint64_t s) const {
    const auto& tail = tails_.front();
    const std::uint64_t wmax = std::min<std::uint64_t>(s, tail.size() - 1);
    BigInt total = 0;
    for (std::uint64_t w = 0; w <= wmax; ++w) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), s - w + free_, free_);
      total += binom * tail[w];
    }
    return total;
  }

  /// Smallest s with count_upto(s) > idx.
  std::uint64_t grade_of(const BigInt& idx) const {
    std::uint64_t hi = 1;
    while (count_upto(hi) <= idx) hi *= 2;
    std::uint64_t lo = 0;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (count_upto(mid) > idx) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  std::uint64_t max_code(std::size_t p, const GroupDescriptor& g, std::uint64_t rem) const {
    if (p < free_) return rem;
    return std::min<std::uint64_t>(rem, static_cast<std::uint64_t>(g.torsion_moduli[p - free_] - 1));
  }

 private:
  std::size_t free_;
  std::size_t dim_;
  std::vector<std::vector<BigInt>> tails_;
};

}  // namespace

void GroupDescriptor::validate() const {
  if (dimension() == 0) throw ShapeError("group descriptor must have free rank or torsion");
  for (const auto q : torsion_moduli) {
    if (q < 2) throw ShapeError("torsion modulus must be >= 2, got " + std::to_string(q));
  }
}

HElement HElement::zero(const GroupDescriptor& g) {
  return {std::vector<std::int64_t>(g.free_rank, 0),
          std::vector<std::int64_t>(g.torsion_moduli.size(), 0)};
}

bool HElement::is_zero() const {
  return std::all_of(free.begin(), free.end(), [](auto v) { return v == 0; }) &&
         std::all_of(torsion.begin(), torsion.end(), [](auto v) { return v == 0; });
}

std::int64_t HElement::free_sup_norm() const {
  std::int64_t out = 0;
  for (const auto v : free) out = std::max(out, v < 0 ? -v : v);
  return out;
}

void check_conforms(const GroupDescriptor& g, const HElement& h) {
  if (h.free.size() != g.free_rank || h.torsion.size() != g.torsion_moduli.size()) {
    throw ShapeError("element " + to_string(h) + " does not match descriptor arity");
  }
  for (std::size_t i = 0; i < h.torsion.size(); ++i) {
    if (h.torsion[i] < 0 || h.torsion[i] >= g.torsion_moduli[i]) {
      throw ShapeError("torsion coordinate out of range in " + to_string(h));
    }
  }
}

HElement combine(const GroupDescriptor& g, const HElement& a, const HElement& b, int sign) {
  check_conforms(g, a);
  check_conforms(g, b);
  HElement out = a;
  for (std::size_t i = 0; i < out.free.size(); ++i) {
    out.free[i] = checked_add(out.free[i], sign * b.free[i]);
  }
  for (std::size_t i = 0; i < out.torsion.size(); ++i) {
    out.torsion[i] = reduce_mod(out.torsion[i] + sign * b.torsion[i], g.torsion_moduli[i]);
  }
  return out;
}

HElement negate(const GroupDescriptor& g, const HElement& a) {
  return combine(g, HElement::zero(g), a, -1);
}

HElement scale(const GroupDescriptor& g, const HElement& a, std::int64_t factor) {
  check_conforms(g, a);
  HElement out = a;
  for (auto& v : out.free) v = checked_mul(v, factor);
  for (std::size_t i = 0; i < out.torsion.size(); ++i) {
    const std::int64_t q = g.torsion_moduli[i];
    out.torsion[i] = reduce_mod(checked_mul(out.torsion[i], reduce_mod(factor, q)), q);
  }
  return out;
}

ExtElement elem_combine(const GroupDescriptor& g, const ExtElement& a, const ExtElement& b,
                        int sign) {
  ExtElement out{combine(g, a.h, b.h, sign), a.k};
  if (sign >= 0) {
    out.k += b.k;
  } else {
    out.k -= b.k;
  }
  return out;
}

ExtElement negate(const GroupDescriptor& g, const ExtElement& a) {
  return {negate(g, a.h), -a.k};
}

std::uint64_t zigzag_encode(std::int64_t x) {
  return x > 0 ? 2 * static_cast<std::uint64_t>(x) - 1 : 2 * static_cast<std::uint64_t>(-x);
}

std::int64_t zigzag_decode(std::uint64_t code) {
  return (code & 1U) ? static_cast<std::int64_t>((code + 1) / 2)
                     : -static_cast<std::int64_t>(code / 2);
}

std::uint64_t group_order(const GroupDescriptor& g) {
  if (!g.is_finite()) return 0;
  std::uint64_t out = 1;
  for (const auto q : g.torsion_moduli) {
    if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(q), &out)) {
      throw DomainError("group order exceeds 64 bits");
    }
  }
  return out;
}

HElement enumerate_h(const GroupDescriptor& g, std::uint64_t n) {
  g.validate();
  if (n < 1) throw DomainError("enumeration index must be >= 1");
  if (g.is_finite() && n > group_order(g)) {
    throw DomainError("enumeration index " + std::to_string(n) + " exceeds |H| = " +
                      std::to_string(group_order(g)));
  }
  const TupleCounter counter(g);
  BigInt idx = n - 1;
  const std::uint64_t sum = counter.grade_of(idx);
  if (sum > 0) idx -= counter.count_upto(sum - 1);
  HElement out = HElement::zero(g);
  std::uint64_t rem = sum;
  for (std::size_t p = 0; p < g.dimension(); ++p) {
    const std::uint64_t vmax = counter.max_code(p, g, rem);
    std::uint64_t v = 0;
    for (; v <= vmax; ++v) {
      const BigInt c = counter.count(p + 1, rem - v);
      if (idx < c) break;
      idx -= c;
    }
    if (p < g.free_rank) {
      out.free[p] = zigzag_decode(v);
    } else {
      out.torsion[p - g.free_rank] = static_cast<std::int64_t>(v);
    }
    rem -= v;
  }
  return out;
}

std::uint64_t index_of(const GroupDescriptor& g, const HElement& h) {
  g.validate();
  check_conforms(g, h);
  std::vector<std::uint64_t> codes;
  codes.reserve(g.dimension());
  for (const auto v : h.free) codes.push_back(zigzag_encode(v));
  for (const auto v : h.torsion) codes.push_back(static_cast<std::uint64_t>(v));
  const std::uint64_t sum = std::accumulate(codes.begin(), codes.end(), std::uint64_t{0});

  const TupleCounter counter(g);
  BigInt idx = sum > 0 ? counter.count_upto(sum - 1) : BigInt(0);
  std::uint64_t rem = sum;
  for (std::size_t p = 0; p < codes.size(); ++p) {
    for (std::uint64_t v = 0; v < codes[p]; ++v) idx += counter.count(p + 1, rem - v);
    rem -= codes[p];
  }
  return to_u64(idx + 1);
}

std::uint64_t index_bound_for_radius(const GroupDescriptor& g, std::uint64_t radius) {
  g.validate();
  const TupleCounter counter(g);
  return to_u64(counter.count_upto(2 * radius));
}

std::string to_string(const HElement& h) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto v : h.free) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  for (const auto v : h.torsion) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace mono
