#include "mono/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mono/construction.hpp"
#include "mono/counterexample.hpp"
#include "mono/errors.hpp"
#include "mono/evaluator.hpp"
#include "mono/execution.hpp"
#include "mono/json_io.hpp"
#include "mono/norm.hpp"
#include "mono/verification.hpp"

namespace mono {

namespace {

constexpr std::size_t kDefaultDepth = 50;
constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kDefaultEpsilon = "1/1024";

struct BuildArgs {
  std::string group;
  std::string norm;
  std::size_t depth = kDefaultDepth;
  std::string out;
};

struct EvalArgs {
  std::string table;
  std::string element;
  std::string epsilon = kDefaultEpsilon;
};

struct DensityArgs {
  std::string table;
  std::uint64_t m = 1;
  std::uint64_t j = 1;
  std::string epsilon = kDefaultEpsilon;
};

struct VerifyArgs {
  std::string table;
  std::string suite = "all";
  std::size_t samples = 500;
  std::uint64_t seed = kDefaultSeed;
  std::string epsilon = kDefaultEpsilon;
  std::uint64_t max_m = 5;
  std::uint64_t max_j = 5;
  bool serial = false;
  bool timing = false;
};

struct CounterexampleArgs {
  std::uint64_t grid = 50;
  std::string certificates;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string v1;
  std::string v2;
};

struct FamilyArgs {
  std::string group;
  std::string norms;
  std::size_t depth = kDefaultDepth;
  std::string out_dir;
};

Rational parse_epsilon(const std::string& text) {
  const Rational eps = Rational::parse(text);
  if (eps.sign() <= 0 || eps >= Rational(1)) throw DomainError("--epsilon must lie in (0, 1)");
  return eps;
}

void print(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int do_build(const BuildArgs& a, std::ostream& out) {
  const GroupDescriptor g = descriptor_from_json(parse_json(a.group, "--group"));
  const NormSpec spec = spec_from_json(parse_json(a.norm, "--norm"));
  const AnchorTable table = build_anchor_table(g, spec, a.depth);
  save_table(table, a.out);
  print(out, {{"depth", table.depth()},
              {"k", to_string(table.anchor(table.depth()).k)},
              {"out", a.out}});
  return kExitOk;
}

int do_eval(const EvalArgs& a, std::ostream& out) {
  const AnchorTable table = load_table(a.table);
  const ExtElement x = element_from_json(table.descriptor(), parse_json(a.element, "--element"));
  print(out, to_json(evaluate(table, x, parse_epsilon(a.epsilon))));
  return kExitOk;
}

int do_density(const DensityArgs& a, std::ostream& out) {
  const AnchorTable table = load_table(a.table);
  const DensityWitness w = density_witness(table, a.m, a.j, parse_epsilon(a.epsilon));
  json j = {{"m", a.m}, {"j", a.j}};
  j.update(to_json(w));
  print(out, j);
  return w.holds ? kExitOk : kExitViolation;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const AnchorTable table = load_table(a.table);
  const Rational eps = parse_epsilon(a.epsilon);
  const Execution exec = a.serial ? Execution::serial : Execution::parallel;
  const bool all = a.suite == "all";

  std::vector<SuiteReport> reports;
  if (all || a.suite == "extension") {
    reports.push_back(verify_extension(table, a.samples, a.seed, exec));
  }
  if (all || a.suite == "axioms") {
    reports.push_back(verify_norm_axioms(table, a.samples, a.seed, eps, exec));
  }
  if (all || a.suite == "density") {
    reports.push_back(verify_density(table, a.max_m, a.max_j, eps, exec));
  }
  if (all || a.suite == "truncation") {
    reports.push_back(verify_truncation(table, a.samples, a.seed, eps, exec));
  }

  bool pass = true;
  json list = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    list.push_back(to_json(r, a.timing));
  }
  print(out, {{"pass", pass}, {"reports", list}});
  return pass ? kExitOk : kExitViolation;
}

int do_counterexample(const CounterexampleArgs& a, bool single, std::ostream& out) {
  if (single) {
    const ContradictionReport r = counterexample_certificate(a.n, a.m, Rational::parse(a.v1),
                                                             Rational::parse(a.v2));
    print(out, to_json(r));
    return r.contradiction() ? kExitOk : kExitViolation;
  }
  const ScanSummary s = counterexample_scan(a.grid);
  if (a.certificates == "-") {
    for (const auto& c : s.certificates) print(out, to_json(c));
  } else if (!a.certificates.empty()) {
    std::ofstream file(a.certificates);
    if (!file) throw ParseError("cannot write " + a.certificates);
    for (const auto& c : s.certificates) file << to_json(c).dump() << '\n';
  }
  print(out, summary_to_json(s));
  return (s.all_identities && s.all_contradictions) ? kExitOk : kExitViolation;
}

int do_family(const FamilyArgs& a, std::ostream& out) {
  const GroupDescriptor g = descriptor_from_json(parse_json(a.group, "--group"));
  const json norms = parse_json(a.norms, "--norms");
  if (!norms.is_array() || norms.empty()) throw ParseError("--norms must be a non-empty JSON array");
  std::vector<NormSpec> specs;
  for (const auto& n : norms) specs.push_back(spec_from_json(n));

  const std::vector<AnchorTable> tables = extend_family(g, specs, a.depth);
  const std::string reference = shared_block(tables.front()).dump();
  bool identical = true;
  json members = json::array();
  for (std::size_t i = 0; i < tables.size(); ++i) {
    identical = identical && shared_block(tables[i]).dump() == reference;
    const AxiomReport axioms = validate_norm_spec(g, specs[i], 200, kDefaultSeed);
    json member = {{"spec", to_json(specs[i])},
                   {"pseudonorm", axioms.pseudonorm},
                   {"flags", axioms.flags}};
    if (!a.out_dir.empty()) {
      const auto path = std::filesystem::path(a.out_dir) / ("table_" + std::to_string(i) + ".json");
      save_table(tables[i], path);
      member["out"] = path.string();
    }
    members.push_back(member);
  }
  print(out, {{"depth", a.depth},
              {"shared_identical", identical},
              {"k", to_string(tables.front().anchor(tables.front().depth()).k)},
              {"members", members}});
  return identical ? kExitOk : kExitViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  apply_thread_limit_from_env();

  CLI::App app{"Monothetic extensions of bounded invariant group norms"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build and save an anchor table");
  build_cmd->add_option("--group", build.group, "Group descriptor JSON")->required();
  build_cmd->add_option("--norm", build.norm, "Norm spec JSON")->required();
  build_cmd->add_option("--depth", build.depth, "Number of anchors")
      ->capture_default_str()->check(CLI::PositiveNumber);
  build_cmd->add_option("--out", build.out, "Output table path")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Certified evaluation of D");
  eval_cmd->add_option("--table", eval.table, "Table file")->required();
  eval_cmd->add_option("--element", eval.element, R"(Element JSON {"h":[...],"k":...})")->required();
  eval_cmd->add_option("--epsilon", eval.epsilon, "Interval width near 1")->capture_default_str();

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("density", "Density witness for (m, j)");
  density_cmd->add_option("--table", density.table, "Table file")->required();
  density_cmd->add_option("--m", density.m, "Target index")->required()->check(CLI::PositiveNumber);
  density_cmd->add_option("--j", density.j, "Precision index")->required()->check(CLI::PositiveNumber);
  density_cmd->add_option("--epsilon", density.epsilon, "Interval width near 1")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--table", verify.table, "Table file")->required();
  verify_cmd->add_option("--suite", verify.suite, "Suite name")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "extension", "axioms", "density", "truncation"}));
  verify_cmd->add_option("--samples", verify.samples, "Samples per suite")
      ->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--epsilon", verify.epsilon, "Interval width near 1")->capture_default_str();
  verify_cmd->add_option("--max-m", verify.max_m, "Density grid rows")
      ->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-j", verify.max_j, "Density grid columns")
      ->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--serial", verify.serial, "Use the serial reference loops");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time in reports");

  CounterexampleArgs cx;
  auto* cx_cmd = app.add_subcommand("counterexample", "Unbounded l1 infeasibility certificates");
  cx_cmd->add_option("--grid", cx.grid, "Scan (n, m) over [1, grid]^2")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cx_cmd->add_option("--certificates", cx.certificates, "Write JSON lines here ('-' for stdout)");
  auto* n_opt = cx_cmd->add_option("--n", cx.n, "Single certificate: power n");
  auto* m_opt = cx_cmd->add_option("--m", cx.m, "Single certificate: power m");
  auto* v1_opt = cx_cmd->add_option("--v1", cx.v1, "Single certificate: D(c^n - e1)");
  auto* v2_opt = cx_cmd->add_option("--v2", cx.v2, "Single certificate: D(e2 - c^m)");
  n_opt->needs(m_opt, v1_opt, v2_opt);
  m_opt->needs(n_opt);
  v1_opt->needs(n_opt);
  v2_opt->needs(n_opt);

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "Extend a family of norms with shared powers");
  family_cmd->add_option("--group", family.group, "Group descriptor JSON")->required();
  family_cmd->add_option("--norms", family.norms, "JSON array of norm specs")->required();
  family_cmd->add_option("--depth", family.depth, "Number of anchors")
      ->capture_default_str()->check(CLI::PositiveNumber);
  family_cmd->add_option("--out-dir", family.out_dir, "Write table_<i>.json files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return do_build(build, out);
    if (*eval_cmd) return do_eval(eval, out);
    if (*density_cmd) return do_density(density, out);
    if (*verify_cmd) return do_verify(verify, out);
    if (*cx_cmd) return do_counterexample(cx, n_opt->count() > 0, out);
    if (*family_cmd) return do_family(family, out);
  } catch (const ExtendTableError& e) {
    print(out, {{"error", "extend_table"}, {"required_depth", e.required_depth()}});
    err << "error: " << e.what() << '\n';
    return kExitExtendTable;
  } catch (const HypothesisError& e) {
    print(out, {{"error", "hypothesis_not_met"}, {"detail", e.what()}});
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mono
