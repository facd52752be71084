// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mono/construction.hpp"
#include "mono/counterexample.hpp"
#include "mono/evaluator.hpp"
#include "mono/json_io.hpp"
#include "mono/norm.hpp"
#include "mono/verification.hpp"

using namespace mono;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kDepth = 50;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

bool report(const std::string& id, const std::string& title, double limit_s,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  std::string detail = o.note;
  if (!in_time) detail = "over time limit";
  std::printf("[%s] %s %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", id.c_str(),
              title.c_str(), secs, limit_s, detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  return pass;
}

std::string first_violation(const SuiteReport& r) {
  if (r.pass()) return "";
  const Violation& v = r.violations.front();
  return r.suite + " #" + std::to_string(v.sample_index) + " " + v.input + ": expected " +
         v.expected + ", got " + v.got + " (" + v.detail + ")";
}

// Recurrence computed directly from the anti-diagonal walk, independent of the library.
std::vector<BigInt> k_oracle(std::size_t count) {
  std::vector<std::uint64_t> js;
  for (std::uint64_t s = 2; js.size() < count; ++s) {
    for (std::uint64_t m = 1; m < s && js.size() < count; ++m) js.push_back(s - m);
  }
  std::vector<BigInt> k = {BigInt(1)};
  std::uint64_t max_j = 0;
  for (std::size_t n = 1; n < count; ++n) {
    max_j = std::max(max_j, js[n - 1]);
    k.push_back(k.back() * max_j + 1);
  }
  return k;
}

// Unit-weight l1 with k_8 lowered to 2: a_2 - a_8 = (h_2, 0) then costs 5/6 < d(h_2) = 1.
AnchorTable corrupted(const GroupDescriptor& g) {
  const NormSpec unit{CappedWeightedL1{std::vector<Rational>(g.free_rank, Rational(1))}};
  const AnchorTable good = build_anchor_table(g, unit, kDepth);
  std::vector<Anchor> anchors = good.anchors();
  anchors[7].k = 2;
  return AnchorTable::from_parts_unchecked(good.descriptor(), good.spec(), anchors, good.deltas());
}

struct Setting {
  std::string label;
  GroupDescriptor group;
  NormSpec spec;
  NormSpec second_spec;
};

Outcome extension_exactness(const AnchorTable& t) {
  Outcome o;
  const SuiteReport r = verify_extension(t, 200, kSeed, Execution::parallel, 50);
  o.require(r.samples == 200, "sample count");
  o.require(r.pass(), first_violation(r));
  return o;
}

bool run_core(const Setting& s, const std::string& prefix) {
  const AnchorTable t = build_anchor_table(s.group, s.spec, kDepth);
  bool all = true;

  all &= report(prefix + "1", "extension exactness" + s.label, 10, [&] {
    return extension_exactness(t);
  });

  all &= report(prefix + "2", "anchor bounds" + s.label, 30, [&] {
    Outcome o;
    for (std::size_t n = 1; n <= 30; ++n) {
      const EvalResult r = evaluate(t, t.anchor_element(n));
      o.require(r.upper() <= t.anchor(n).value,
                "anchor " + std::to_string(n) + " upper " + r.upper().str() + " > " +
                    t.anchor(n).value.str());
    }
    return o;
  });

  all &= report(prefix + "3", "k-sequence law" + s.label, 1, [&] {
    Outcome o;
    const KSequence seq = k_sequence(200);
    const std::vector<BigInt> expected_prefix = {1, 2, 5, 11, 34, 103};
    for (std::size_t i = 0; i < expected_prefix.size(); ++i) {
      o.require(seq.k[i] == expected_prefix[i], "prefix mismatch at " + std::to_string(i + 1));
    }
    o.require(seq.k == k_oracle(200), "recurrence oracle mismatch");
    std::uint64_t max_j = 0;
    for (std::size_t n = 2; n <= 200; ++n) {
      max_j = std::max(max_j, pair_index(n - 1).j);
      o.require(seq.k[n - 1] > seq.k[n - 2], "not increasing at " + std::to_string(n));
      o.require(seq.k[n - 1] > seq.k[n - 2] * max_j, "growth law fails at " + std::to_string(n));
    }
    o.require(k_sequence(200).k == seq.k, "repeated run differs");
    for (const NormSpec& spec : {s.spec, s.second_spec}) {
      const AnchorTable other = build_anchor_table(s.group, spec, 200);
      for (std::size_t n = 1; n <= 200; ++n) {
        o.require(other.anchor(n).k == seq.k[n - 1], "k depends on the norm");
      }
    }
    return o;
  });

  all &= report(prefix + "4", "norm axioms" + s.label, 60, [&] {
    Outcome o;
    for (const NormSpec& spec : {s.spec, s.second_spec}) {
      const AnchorTable each = build_anchor_table(s.group, spec, kDepth);
      const SuiteReport r = verify_norm_axioms(each, 500, kSeed);
      o.require(r.pass(), first_violation(r));
    }
    const SuiteReport bad = verify_norm_axioms(corrupted(s.group), 500, kSeed);
    o.require(!bad.pass(), "corrupted table passed");
    return o;
  });

  all &= report(prefix + "5", "oracle equivalence" + s.label, 120, [&] {
    Outcome o;
    const AnchorTable small = build_anchor_table(s.group, s.spec, 10);
    const std::size_t r = s.group.free_rank;
    std::vector<std::int64_t> coords(r, -2);
    std::size_t checked = 0;
    while (true) {
      for (long k = -3; k <= 3; ++k) {
        const ExtElement x{{coords, {}}, BigInt(k)};
        const EvalResult e = evaluate(small, x);
        const Rational brute = brute_force_eval(small, x, 3, 3);
        const std::string where = to_json(x).dump();
        if (e.is_exact()) {
          o.require(brute >= e.value, where + ": brute force below evaluate");
          if (!e.witness || witness_fits(small, *e.witness, 3, 3)) {
            o.require(brute == e.value, where + ": brute force misses the witness");
          }
        } else {
          o.require(brute > e.lower(), where + ": brute force inside certified gap");
        }
        ++checked;
      }
      std::size_t p = 0;
      while (p < r && coords[p] == 2) coords[p++] = -2;
      if (p == r) break;
      ++coords[p];
    }
    o.require(checked > 0, "nothing checked");
    return o;
  });

  all &= report(prefix + "6", "density" + s.label, 60, [&] {
    Outcome o;
    o.require(t.depth() >= unpair_index(5, 5), "table too shallow");
    const SuiteReport r = verify_density(t, 5, 5);
    o.require(r.samples == 25, "grid size");
    o.require(r.pass(), first_violation(r));
    return o;
  });

  all &= report(prefix + "7", "truncation stabilization" + s.label, 120, [&] {
    Outcome o;
    const SuiteReport r = verify_truncation(t, 100, kSeed, default_epsilon(), Execution::parallel,
                                            {3, 5});
    o.require(r.pass(), first_violation(r));
    return o;
  });

  return all;
}

}  // namespace

int main() {
  bool all = true;
  const GroupDescriptor z{1, {}};

  all &= run_core({"", z, {CappedWeightedL1{{Rational(1, 4)}}}, {CappedLInf{Rational(3)}}}, "C");

  all &= report("C8", "counterexample scan", 10, [] {
    Outcome o;
    const ScanSummary s = counterexample_scan(50);
    o.require(s.certificates.size() == 2500, "certificate count");
    o.require(s.v == Rational(1, 2) - Rational(1, 2500), "scan value");
    for (const auto& c : s.certificates) {
      const Rational half = Rational(std::abs(c.n) + std::abs(c.m), 2);
      o.require(c.identity_holds, "identity fails");
      o.require(c.implied_bound < half, "implied bound not below (|m|+|n|)/2");
    }
    return o;
  });
  all &= run_core({" [capped l1 on Z^2]", {2, {}}, {CappedWeightedL1{{Rational(1), Rational(1)}}},
                   {CappedLInf{Rational(2)}}},
                  "C8.");

  all &= report("C9", "family extension", 60, [&] {
    Outcome o;
    const std::vector<NormSpec> specs = {{CappedWeightedL1{{Rational(1)}}},
                                         {CappedLInf{Rational(3)}},
                                         {RationalRotation{Rational(1, 3)}}};
    const auto tables = extend_family(z, specs, kDepth);
    const std::string reference = shared_block(tables.front()).dump();
    for (const auto& t : tables) {
      o.require(shared_block(t).dump() == reference, "shared blocks differ");
      const Outcome member = extension_exactness(t);
      o.require(member.ok, t.spec().type_name() + ": " + member.note);
    }
    o.require(evaluate(tables[2], {{{3}, {}}, BigInt(0)}).value.is_zero(),
              "pseudonorm vanishing not preserved");
    return o;
  });

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
