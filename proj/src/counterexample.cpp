#include "mono/counterexample.hpp"

#include "mono/errors.hpp"
#include "mono/group.hpp"
#include "parallel.hpp"

namespace mono {

namespace {

const GroupDescriptor& plane() {
  static const GroupDescriptor g{2, {}};
  return g;
}

ExtElement times(const ExtElement& x, std::int64_t factor) {
  return {scale(plane(), x.h, factor), x.k * BigInt(static_cast<long>(factor))};
}

}  // namespace

ContradictionReport counterexample_certificate(std::int64_t n, std::int64_t m, const Rational& v1,
                                               const Rational& v2) {
  if (n == 0 || m == 0) throw DomainError("n and m must be nonzero");
  const Rational half(1, 2);
  if (v1.sign() <= 0 || v1 >= half || v2.sign() <= 0 || v2 >= half) {
    throw HypothesisError("hypothesis not met: need 0 < v1, v2 < 1/2 (got " + v1.str() + ", " +
                          v2.str() + ")");
  }
  const GroupDescriptor& g = plane();
  const ExtElement near_e1{{{-1, 0}, {}}, BigInt(static_cast<long>(n))};  // c^n - e1
  const ExtElement near_e2{{{0, 1}, {}}, BigInt(-static_cast<long>(m))};  // e2 - c^m
  const ExtElement lhs = elem_combine(g, times(near_e1, m), times(near_e2, n));
  const ExtElement rhs{{{-m, n}, {}}, BigInt(0)};

  const Rational abs_n(n < 0 ? -n : n);
  const Rational abs_m(m < 0 ? -m : m);
  ContradictionReport r;
  r.n = n;
  r.m = m;
  r.v1 = v1;
  r.v2 = v2;
  r.identity_holds = lhs == rhs;
  r.required_norm = abs_m + abs_n;
  r.implied_bound = abs_m * v1 + abs_n * v2;
  r.literal_bound = Rational(m) * v1 + Rational(n) * v2;
  r.margin = r.required_norm - r.implied_bound;
  r.half_gap = r.required_norm * half - r.implied_bound;
  return r;
}

ScanSummary counterexample_scan(std::uint64_t limit, Execution exec) {
  if (limit < 1) throw DomainError("scan limit must be >= 1");
  ScanSummary s;
  s.limit = limit;
  const auto l = static_cast<long>(limit);
  s.v = Rational(1, 2) - Rational(1, l * l);
  if (limit == 1) {
    // 1/2 - 1/limit^2 is not admissible at limit 1; use the limit-2 value.
    s.v = Rational(1, 4);
  }
  const std::size_t count = limit * limit;
  s.certificates.resize(count);
  detail::for_each_index(count, exec, [&](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i / limit + 1);
    const auto m = static_cast<std::int64_t>(i % limit + 1);
    s.certificates[i] = counterexample_certificate(n, m, s.v, s.v);
  });
  s.all_identities = true;
  s.all_contradictions = true;
  for (const auto& c : s.certificates) {
    s.all_identities = s.all_identities && c.identity_holds;
    s.all_contradictions = s.all_contradictions && c.contradiction();
    if (&c == &s.certificates.front() || c.margin < s.min_margin) s.min_margin = c.margin;
    if (&c == &s.certificates.front() || c.half_gap < s.min_half_gap) s.min_half_gap = c.half_gap;
  }
  return s;
}

}  // namespace mono
