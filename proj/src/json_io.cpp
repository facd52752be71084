#include "mono/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!keys.contains(key)) throw ParseError("unknown key '" + key + "' in " + what);
  }
}

const json& require(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ParseError(what + " is missing '" + key + "'");
  return j.at(key);
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational \"p/q\", got " + j.dump());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long>());
  throw ParseError("expected an integer, got " + j.dump());
}

std::uint64_t index_from_json(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(what + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in " + what + ": " + e.what());
  }
}

json to_json(const GroupDescriptor& g) {
  return {{"free_rank", g.free_rank}, {"torsion_moduli", g.torsion_moduli}};
}

GroupDescriptor descriptor_from_json(const json& j) {
  reject_unknown_keys(j, {"free_rank", "torsion_moduli"}, "group descriptor");
  GroupDescriptor g;
  try {
    if (j.contains("free_rank")) g.free_rank = j.at("free_rank").get<std::size_t>();
    if (j.contains("torsion_moduli")) {
      g.torsion_moduli = j.at("torsion_moduli").get<std::vector<std::int64_t>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("group descriptor: ") + e.what());
  }
  g.validate();
  return g;
}

json to_json(const NormSpec& spec) {
  json out = {{"type", spec.type_name()}};
  if (const auto* l1 = std::get_if<CappedWeightedL1>(&spec.params)) {
    json weights = json::array();
    for (const auto& w : l1->weights) weights.push_back(w.str());
    out["weights"] = weights;
  } else if (const auto* linf = std::get_if<CappedLInf>(&spec.params)) {
    out["scale"] = linf->scale.str();
  } else if (const auto* rot = std::get_if<RationalRotation>(&spec.params)) {
    out["alpha"] = rot->alpha.str();
  }
  return out;
}

NormSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("norm spec must be a JSON object");
  const std::string type = require(j, "type", "norm spec").get<std::string>();
  if (type == "capped_l1") {
    reject_unknown_keys(j, {"type", "weights"}, "capped_l1 spec");
    CappedWeightedL1 s;
    for (const auto& w : require(j, "weights", "capped_l1 spec")) {
      s.weights.push_back(rational_from_json(w));
    }
    return {s};
  }
  if (type == "capped_linf") {
    reject_unknown_keys(j, {"type", "scale"}, "capped_linf spec");
    return {CappedLInf{rational_from_json(require(j, "scale", "capped_linf spec"))}};
  }
  if (type == "cyclic_scaled") {
    reject_unknown_keys(j, {"type"}, "cyclic_scaled spec");
    return {CyclicScaled{}};
  }
  if (type == "rational_rotation") {
    reject_unknown_keys(j, {"type", "alpha"}, "rational_rotation spec");
    return {RationalRotation{rational_from_json(require(j, "alpha", "rational_rotation spec"))}};
  }
  throw ParseError("unknown norm type '" + type + "'");
}

json to_json(const HElement& h) {
  json out = json::array();
  for (const auto v : h.free) out.push_back(v);
  for (const auto v : h.torsion) out.push_back(v);
  return out;
}

HElement helement_from_json(const GroupDescriptor& g, const json& j) {
  if (!j.is_array() || j.size() != g.dimension()) {
    throw ShapeError("element needs " + std::to_string(g.dimension()) + " coordinates, got " +
                     j.dump());
  }
  HElement h = HElement::zero(g);
  for (std::size_t i = 0; i < g.dimension(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError("coordinates must be integers");
    const auto v = j[i].get<std::int64_t>();
    if (i < g.free_rank) {
      h.free[i] = v;
    } else {
      const std::int64_t q = g.torsion_moduli[i - g.free_rank];
      h.torsion[i - g.free_rank] = ((v % q) + q) % q;
    }
  }
  return h;
}

json to_json(const ExtElement& x) { return {{"h", to_json(x.h)}, {"k", to_string(x.k)}}; }

ExtElement element_from_json(const GroupDescriptor& g, const json& j) {
  reject_unknown_keys(j, {"h", "k"}, "element");
  ExtElement x;
  x.h = j.contains("h") ? helement_from_json(g, j.at("h")) : HElement::zero(g);
  x.k = j.contains("k") ? bigint_from_json(j.at("k")) : BigInt(0);
  return x;
}

json to_json(const Decomposition& d) {
  json coeffs = json::object();
  for (const auto& [n, m] : d.coefficients) coeffs[std::to_string(n)] = m;
  return {{"coeffs", coeffs}, {"residual", to_json(d.residual)}, {"cost", d.cost.str()}};
}

json to_json(const EvalResult& r) {
  json out;
  if (r.is_exact()) {
    out["kind"] = "exact";
    out["value"] = r.value.str();
    out["witness"] = r.witness ? to_json(*r.witness) : json("H-only");
  } else {
    out["kind"] = "interval";
    out["lower"] = r.value.str();
    out["upper"] = Rational(1).str();
  }
  out["truncation_level"] = r.truncation_level;
  return out;
}

json to_json(const DensityWitness& w) {
  return {{"n", w.n},          {"power", to_string(w.power)}, {"bound", w.bound.str()},
          {"holds", w.holds},  {"certified", to_json(w.certified)}};
}

json to_json(const SuiteReport& r, bool with_timing) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"sample_index", v.sample_index},
                          {"input", v.input},
                          {"expected", v.expected},
                          {"got", v.got},
                          {"detail", v.detail}});
  }
  json out = {{"suite", r.suite},
              {"samples", r.samples},
              {"pass", r.pass()},
              {"violations", violations}};
  if (with_timing) out["wall_ms"] = r.wall_ms;
  return out;
}

json to_json(const ContradictionReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"v1", r.v1.str()},
          {"v2", r.v2.str()},
          {"identity_holds", r.identity_holds},
          {"required_norm", r.required_norm.str()},
          {"implied_bound", r.implied_bound.str()},
          {"literal_bound", r.literal_bound.str()},
          {"margin", r.margin.str()},
          {"half_gap", r.half_gap.str()},
          {"contradiction", r.contradiction()}};
}

json summary_to_json(const ScanSummary& s) {
  const bool refuted = s.all_identities && s.all_contradictions;
  return {{"limit", s.limit},
          {"v", s.v.str()},
          {"certificates", s.certificates.size()},
          {"all_identities", s.all_identities},
          {"all_contradictions", s.all_contradictions},
          {"min_margin", s.min_margin.str()},
          {"min_half_gap", s.min_half_gap.str()},
          {"conclusion",
           refuted ? "no (n, m) in the grid satisfies both density requirements; the unbounded "
                     "l1 norm on Z^2 admits no extension with dense C"
                   : "scan did not certify a contradiction for every (n, m)"}};
}

json to_json(const AnchorTable& table) {
  json anchors = json::array();
  for (const auto& a : table.anchors()) {
    anchors.push_back({{"n", a.n}, {"m", a.m}, {"j", a.j}, {"k", to_string(a.k)}});
  }
  json deltas = json::array();
  for (const auto& d : table.deltas()) deltas.push_back(d.str());
  return {{"version", kFileVersion},
          {"descriptor", to_json(table.descriptor())},
          {"spec", to_json(table.spec())},
          {"N", table.depth()},
          {"anchors", anchors},
          {"deltas", deltas}};
}

AnchorTable table_from_json(const json& j) {
  reject_unknown_keys(j, {"version", "descriptor", "spec", "N", "anchors", "deltas"},
                      "anchor table");
  const json& version = require(j, "version", "anchor table");
  if (!version.is_number_integer() || version.get<int>() != kFileVersion) {
    throw ParseError("unsupported table version " + version.dump());
  }
  const GroupDescriptor g = descriptor_from_json(require(j, "descriptor", "anchor table"));
  const NormSpec spec = spec_from_json(require(j, "spec", "anchor table"));
  validate_spec(g, spec);
  const std::uint64_t depth = index_from_json(require(j, "N", "anchor table"), "N");
  const json& anchors = require(j, "anchors", "anchor table");
  if (!anchors.is_array() || anchors.size() != depth || depth == 0) {
    throw CorruptedTableError("anchor count does not match N");
  }

  const AnchorTable rebuilt = build_anchor_table(g, spec, depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const json& a = anchors[i];
    reject_unknown_keys(a, {"n", "m", "j", "k"}, "anchor");
    const Anchor& expected = rebuilt.anchor(i + 1);
    const std::string where = "anchor " + std::to_string(i + 1);
    if (index_from_json(require(a, "n", where), "n") != expected.n) {
      throw CorruptedTableError(where + ": index out of sequence");
    }
    if (index_from_json(require(a, "m", where), "m") != expected.m ||
        index_from_json(require(a, "j", where), "j") != expected.j) {
      throw CorruptedTableError(where + ": pairing does not match pi");
    }
    if (bigint_from_json(require(a, "k", where)) != expected.k) {
      throw CorruptedTableError(where + ": k does not satisfy the recurrence");
    }
  }
  if (j.contains("deltas")) {
    const json& deltas = j.at("deltas");
    if (!deltas.is_array() || deltas.size() != depth) {
      throw CorruptedTableError("delta count does not match N");
    }
    for (std::size_t i = 0; i < depth; ++i) {
      if (rational_from_json(deltas[i]) != rebuilt.deltas()[i]) {
        throw CorruptedTableError("delta " + std::to_string(i + 1) + " does not match");
      }
    }
  }
  return rebuilt;
}

json shared_block(const AnchorTable& table) {
  json pi = json::array();
  json k = json::array();
  for (const auto& a : table.anchors()) {
    pi.push_back({a.m, a.j});
    k.push_back(to_string(a.k));
  }
  json delta = json::array();
  for (const auto& d : table.deltas()) delta.push_back(d.str());
  return {{"pi", pi}, {"delta", delta}, {"k", k}};
}

void save_table(const AnchorTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << to_json(table).dump(2) << '\n';
}

AnchorTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read table file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return table_from_json(parse_json(buffer.str(), path.string()));
}

}  // namespace mono
