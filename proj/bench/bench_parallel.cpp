// Serial reference loops against the OpenMP kernels on the same inputs.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mono/construction.hpp"
#include "mono/counterexample.hpp"
#include "mono/evaluator.hpp"
#include "mono/execution.hpp"
#include "mono/sampling.hpp"
#include "mono/verification.hpp"

using namespace mono;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 0;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void row(const std::string& name, int reps, const std::function<void(Execution)>& fn) {
  const double serial = best_of(reps, [&] { fn(Execution::serial); });
  const double parallel = best_of(reps, [&] { fn(Execution::parallel); });
  std::printf("%-22s %12.2f %12.2f %9.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timings"};
  std::size_t samples = 500;
  std::size_t depth = 50;
  std::uint64_t grid = 200;
  int reps = 3;
  app.add_option("--samples", samples, "Samples per suite")->capture_default_str();
  app.add_option("--depth", depth, "Table depth")->capture_default_str();
  app.add_option("--grid", grid, "Counterexample scan size")->capture_default_str();
  app.add_option("--reps", reps, "Repetitions (best is reported)")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const int workers = worker_count();
  const GroupDescriptor g{2, {}};
  const AnchorTable table = build_anchor_table(g, {CappedWeightedL1{{Rational(1, 3), Rational(1, 2)}}}, depth);
  ElementSampler sampler(g, 42, {4, 6});
  std::vector<ExtElement> xs;
  for (std::size_t i = 0; i < samples; ++i) xs.push_back(sampler.x());

  std::printf("workers: %d  samples: %zu  depth: %zu  grid: %llu\n", workers, samples, depth,
              static_cast<unsigned long long>(grid));
  std::printf("%-22s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");
  row("evaluate_batch", reps, [&](Execution e) { evaluate_batch(table, xs, default_epsilon(), e); });
  row("verify_extension", reps, [&](Execution e) { verify_extension(table, samples, 42, e); });
  row("verify_norm_axioms", reps,
      [&](Execution e) { verify_norm_axioms(table, samples, 42, default_epsilon(), e); });
  row("verify_density", reps, [&](Execution e) { verify_density(table, 5, 5, default_epsilon(), e); });
  row("verify_truncation", reps,
      [&](Execution e) { verify_truncation(table, samples / 5, 42, default_epsilon(), e); });
  row("counterexample_scan", reps, [&](Execution e) { counterexample_scan(grid, e); });
  return 0;
}
