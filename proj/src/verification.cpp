#include "mono/verification.hpp"

#include <chrono>
#include <string>

#include "mono/errors.hpp"
#include "mono/norm.hpp"
#include "mono/sampling.hpp"
#include "parallel.hpp"

namespace mono {

namespace {

std::string describe(const ExtElement& x) {
  return "(h=" + to_string(x.h) + ", k=" + to_string(x.k) + ")";
}

std::string describe(const EvalResult& r) {
  if (r.is_exact()) return "exact " + r.value.str() + " @" + std::to_string(r.truncation_level);
  return "interval (" + r.value.str() + ", 1] @" + std::to_string(r.truncation_level);
}

bool same_result(const EvalResult& a, const EvalResult& b) {
  return a.kind == b.kind && a.value == b.value && a.truncation_level == b.truncation_level;
}

template <typename Check>
SuiteReport run_suite(std::string name, std::size_t count, Execution exec, Check&& check) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<Violation>> found(count);
  detail::for_each_index(count, exec, [&](std::size_t i) { found[i] = check(i); });
  SuiteReport report;
  report.suite = std::move(name);
  report.samples = count;
  for (auto& v : found) {
    for (auto& each : v) report.violations.push_back(std::move(each));
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SuiteReport verify_extension(const AnchorTable& table, std::size_t sample_count, std::uint64_t seed,
                             Execution exec, std::uint64_t radius) {
  const GroupDescriptor& g = table.descriptor();
  ElementSampler sampler(table.descriptor(), seed, {radius, 0});
  std::vector<HElement> hs;
  hs.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) hs.push_back(sampler.h(i));

  return run_suite("extension", sample_count, exec, [&](std::size_t i) {
    std::vector<Violation> out;
    const ExtElement x{hs[i], BigInt(0)};
    const EvalResult r = evaluate(table, x);
    const Rational expected = min(Rational(1), base_norm(g, table.spec(), hs[i]));
    if (!r.is_exact() || r.value != expected) {
      out.push_back({i, describe(x), "exact " + expected.str(), describe(r), "D does not extend d"});
    }
    return out;
  });
}

SuiteReport verify_norm_axioms(const AnchorTable& table, std::size_t sample_count,
                               std::uint64_t seed, const Rational& epsilon, Execution exec,
                               SampleScheme scheme) {
  const GroupDescriptor& g = table.descriptor();
  std::vector<std::size_t> small_anchors;
  for (std::size_t n = 1; n <= table.depth(); ++n) {
    if (table.anchor(n).k <= scheme.max_k) small_anchors.push_back(n);
  }

  // Mode i % 3: 0 independent pair; 1 y = z - x with z in H; 2 x = +-a_n, y = z - x.
  ElementSampler sampler(table.descriptor(), seed, scheme);
  std::vector<std::pair<ExtElement, ExtElement>> pairs;
  pairs.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const std::size_t mode = i % 3;
    ExtElement x = sampler.x(i);
    if (mode == 2 && !small_anchors.empty()) {
      const std::size_t n = small_anchors[sampler.below(small_anchors.size())];
      x = table.anchor_element(n);
      if (sampler.below(2) == 1) x = negate(g, x);
    }
    ExtElement y;
    if (mode == 0) {
      y = sampler.x();
    } else {
      const ExtElement z{sampler.h(), BigInt(0)};
      y = elem_combine(g, z, x, -1);
    }
    pairs.emplace_back(std::move(x), std::move(y));
  }
  const bool require_positive = !table.spec().is_pseudonorm_variant();

  return run_suite("axioms", sample_count, exec, [&](std::size_t i) {
    std::vector<Violation> out;
    const auto& [x, y] = pairs[i];
    const std::string input = describe(x) + " + " + describe(y);
    if (i == 0) {
      const EvalResult zero = evaluate(table, ExtElement::zero(g), epsilon);
      if (!zero.is_exact() || !zero.value.is_zero()) {
        out.push_back({i, "0", "exact 0/1", describe(zero), "D(0) != 0"});
      }
    }
    const EvalResult rx = evaluate(table, x, epsilon);
    const EvalResult ry = evaluate(table, y, epsilon);
    const EvalResult rz = evaluate(table, elem_combine(g, x, y), epsilon);
    const EvalResult rneg = evaluate(table, negate(g, x), epsilon);

    for (const EvalResult* r : {&rx, &ry, &rz}) {
      if (r->value > Rational(1) || r->value.sign() < 0) {
        out.push_back({i, input, "value in [0, 1]", describe(*r), "cap"});
      }
    }
    if (!same_result(rx, rneg)) {
      out.push_back({i, describe(x), describe(rx), describe(rneg), "symmetry: D(-x) != D(x)"});
    }
    if (require_positive) {
      if (!x.is_zero() && rx.value.sign() <= 0) {
        out.push_back({i, describe(x), "positive", describe(rx), "positivity"});
      }
    }
    // Only comparisons that follow from the certificates themselves.
    if (rx.is_exact() && ry.is_exact()) {
      const Rational sum = rx.value + ry.value;
      if (rz.is_exact() && rz.value > sum) {
        out.push_back({i, input, "D(x+y) <= " + sum.str(), describe(rz), "triangle"});
      }
      if (!rz.is_exact() && !(min(Rational(1), sum) > rz.value)) {
        out.push_back({i, input, "min(1, D(x)+D(y)) > " + rz.value.str(), sum.str(),
                       "triangle (interval)"});
      }
    }
    return out;
  });
}

SuiteReport verify_density(const AnchorTable& table, std::uint64_t max_m, std::uint64_t max_j,
                           const Rational& epsilon, Execution exec) {
  const std::uint64_t need = unpair_index(max_m, max_j);
  if (need > table.depth()) throw ExtendTableError(need, table.depth());
  const std::size_t count = max_m * max_j;
  return run_suite("density", count, exec, [&](std::size_t i) {
    std::vector<Violation> out;
    const std::uint64_t m = i / max_j + 1;
    const std::uint64_t j = i % max_j + 1;
    const DensityWitness w = density_witness(table, m, j, epsilon);
    if (!w.holds) {
      out.push_back({i, "(m=" + std::to_string(m) + ", j=" + std::to_string(j) + ")",
                     "<= " + w.bound.str(), describe(w.certified), "density witness"});
    }
    return out;
  });
}

SuiteReport verify_truncation(const AnchorTable& table, std::size_t sample_count,
                              std::uint64_t seed, const Rational& epsilon, Execution exec,
                              SampleScheme scheme) {
  ElementSampler sampler(table.descriptor(), seed, scheme);
  std::vector<ExtElement> xs;
  xs.reserve(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) xs.push_back(sampler.x(i));

  return run_suite("truncation", sample_count, exec, [&](std::size_t i) {
    std::vector<Violation> out;
    const ExtElement& x = xs[i];
    const EvalResult r = evaluate(table, x, epsilon);
    Rational previous(1);
    for (std::size_t n = 0; n <= table.depth(); ++n) {
      const Rational dn = evaluate_truncated(table, x, n);
      const std::string where = describe(x) + " at N=" + std::to_string(n);
      if (dn > previous) {
        out.push_back({i, where, "<= " + previous.str(), dn.str(), "D_N increased"});
      }
      previous = dn;
      if (r.is_exact()) {
        if (n >= r.truncation_level && dn != r.value) {
          out.push_back({i, where, r.value.str(), dn.str(), "D_N differs past truncation level"});
        } else if (dn < r.value) {
          out.push_back({i, where, ">= " + r.value.str(), dn.str(), "D_N below certified value"});
        }
      } else if (!(dn > r.value)) {
        out.push_back({i, where, "> " + r.value.str(), dn.str(), "D_N inside certified gap"});
      }
    }
    return out;
  });
}

}  // namespace mono
