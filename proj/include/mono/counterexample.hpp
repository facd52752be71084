#pragma once

#include <cstdint>
#include <vector>

#include "mono/execution.hpp"
#include "mono/rational.hpp"

namespace mono {

/// Refutes a norm D on Z^2 (+) C extending the l1 norm with D(c^n - e1) = v1 < 1/2 and
/// D(e2 - c^m) = v2 < 1/2:
///   m (c^n - e1) + n (e2 - c^m) = -m e1 + n e2,
/// so |m| + |n| <= |m| v1 + |n| v2 < (|m| + |n|) / 2.
struct ContradictionReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  Rational v1;
  Rational v2;
  bool identity_holds = false;
  /// l1 norm of -m e1 + n e2.
  Rational required_norm;
  /// |m| v1 + |n| v2.
  Rational implied_bound;
  /// m v1 + n v2, the bound as written with signed coefficients.
  Rational literal_bound;
  /// required_norm - implied_bound; exceeds (|m|+|n|)/2.
  Rational margin;
  /// (|m|+|n|)/2 - implied_bound; positive.
  Rational half_gap;

  bool contradiction() const {
    return identity_holds && half_gap.sign() > 0 && implied_bound < required_norm;
  }
};

/// Throws DomainError for n or m == 0 and HypothesisError unless 0 < v1, v2 < 1/2.
ContradictionReport counterexample_certificate(std::int64_t n, std::int64_t m, const Rational& v1,
                                               const Rational& v2);

struct ScanSummary {
  std::uint64_t limit = 0;
  Rational v;
  std::vector<ContradictionReport> certificates;  // row-major over (n, m)
  bool all_identities = false;
  bool all_contradictions = false;
  Rational min_margin;
  Rational min_half_gap;
};

/// Certificates for every (n, m) in [1, limit]^2 at v1 = v2 = 1/2 - 1/limit^2.
ScanSummary counterexample_scan(std::uint64_t limit, Execution exec = Execution::parallel);

}  // namespace mono
