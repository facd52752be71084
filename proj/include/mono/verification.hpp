#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mono/construction.hpp"
#include "mono/evaluator.hpp"
#include "mono/execution.hpp"
#include "mono/sampling.hpp"

namespace mono {

struct Violation {
  std::size_t sample_index = 0;
  std::string input;
  std::string expected;
  std::string got;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t samples = 0;
  /// Sorted by sample_index.
  std::vector<Violation> violations;
  double wall_ms = 0.0;

  bool pass() const { return violations.empty(); }
};

/// evaluate((h, 0)) is exact and equals min(1, d(h)).
SuiteReport verify_extension(const AnchorTable& table, std::size_t sample_count, std::uint64_t seed,
                             Execution exec = Execution::parallel, std::uint64_t radius = 50);

/// D(0) = 0, symmetry, triangle inequality (exact/interval casework), cap, and per-query
/// positivity for non-pseudonorm specs.
SuiteReport verify_norm_axioms(const AnchorTable& table, std::size_t sample_count,
                               std::uint64_t seed, const Rational& epsilon = default_epsilon(),
                               Execution exec = Execution::parallel,
                               SampleScheme scheme = {3, 3});

/// density_witness holds for every m <= max_m, j <= max_j.
SuiteReport verify_density(const AnchorTable& table, std::uint64_t max_m, std::uint64_t max_j,
                           const Rational& epsilon = default_epsilon(),
                           Execution exec = Execution::parallel);

/// D_N(x) is non-increasing in N and equals the certified value from the truncation level on.
SuiteReport verify_truncation(const AnchorTable& table, std::size_t sample_count,
                              std::uint64_t seed, const Rational& epsilon = default_epsilon(),
                              Execution exec = Execution::parallel, SampleScheme scheme = {3, 5});

}  // namespace mono
