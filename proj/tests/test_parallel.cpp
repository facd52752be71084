#include <doctest.h>

#include <stdexcept>

#include "../src/parallel.hpp"
#include "mono/construction.hpp"
#include "mono/counterexample.hpp"
#include "mono/json_io.hpp"
#include "mono/sampling.hpp"
#include "mono/verification.hpp"

using namespace mono;

namespace {

json strip(const SuiteReport& r) { return to_json(r, false); }

}  // namespace

TEST_CASE("serial and parallel suites agree") {
  const AnchorTable t = build_anchor_table({1, {2}}, {CappedWeightedL1{{Rational(1, 3)}}}, 40);
  const auto s = Execution::serial;
  const auto p = Execution::parallel;
  CHECK(strip(verify_extension(t, 120, 5, s)) == strip(verify_extension(t, 120, 5, p)));
  CHECK(strip(verify_norm_axioms(t, 120, 5, default_epsilon(), s)) ==
        strip(verify_norm_axioms(t, 120, 5, default_epsilon(), p)));
  CHECK(strip(verify_density(t, 4, 4, default_epsilon(), s)) ==
        strip(verify_density(t, 4, 4, default_epsilon(), p)));
  CHECK(strip(verify_truncation(t, 40, 5, default_epsilon(), s)) ==
        strip(verify_truncation(t, 40, 5, default_epsilon(), p)));
}

TEST_CASE("serial and parallel batch evaluation agree") {
  const GroupDescriptor g{2, {}};
  const AnchorTable t = build_anchor_table(g, {CappedLInf{Rational(5)}}, 40);
  ElementSampler sampler(g, 17, {4, 6});
  std::vector<ExtElement> xs;
  for (int i = 0; i < 150; ++i) xs.push_back(sampler.x());
  const auto a = evaluate_batch(t, xs, default_epsilon(), Execution::serial);
  const auto b = evaluate_batch(t, xs, default_epsilon(), Execution::parallel);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
}

TEST_CASE("serial and parallel scans agree") {
  const ScanSummary a = counterexample_scan(20, Execution::serial);
  const ScanSummary b = counterexample_scan(20, Execution::parallel);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    CHECK(to_json(a.certificates[i]) == to_json(b.certificates[i]));
  }
  CHECK(summary_to_json(a) == summary_to_json(b));
}

TEST_CASE("for_each_index rethrows the first failure") {
  for (const auto exec : {Execution::serial, Execution::parallel}) {
    try {
      detail::for_each_index(100, exec, [](std::size_t i) {
        if (i == 37 || i == 80) throw std::runtime_error("at " + std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "at 37");
    }
  }
}
