#include "mono/norm.hpp"

#include <exception>

#include "mono/errors.hpp"
#include "mono/sampling.hpp"

namespace mono {

namespace {

// min(t, q - t) * 2 / q
Rational cyclic_term(std::int64_t t, std::int64_t q) {
  const std::int64_t folded = std::min(t, q - t);
  return Rational(2 * folded, q);
}

Rational abs_int(std::int64_t v) { return Rational(v < 0 ? -v : v); }

struct ShapeCheck {
  const GroupDescriptor& g;

  void operator()(const CappedWeightedL1& s) const {
    if (s.weights.size() != g.free_rank) {
      throw ShapeError("capped_l1 needs one weight per free coordinate (" +
                       std::to_string(g.free_rank) + "), got " + std::to_string(s.weights.size()));
    }
  }
  void operator()(const CappedLInf&) const {}
  void operator()(const CyclicScaled&) const {
    if (g.free_rank != 0) throw ShapeError("cyclic_scaled applies to torsion-only groups");
  }
  void operator()(const RationalRotation&) const {
    if (g.free_rank != 1 || !g.torsion_moduli.empty()) {
      throw ShapeError("rational_rotation applies to the rank-1 group Z");
    }
  }
};

struct RawNorm {
  const GroupDescriptor& g;
  const HElement& h;

  Rational operator()(const CappedWeightedL1& s) const {
    Rational sum;
    for (std::size_t i = 0; i < h.free.size(); ++i) sum += s.weights[i] * abs_int(h.free[i]);
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      sum += cyclic_term(h.torsion[i], g.torsion_moduli[i]);
    }
    return sum;
  }
  Rational operator()(const CappedLInf& s) const {
    Rational best;
    for (const auto v : h.free) best = max(best, abs_int(v) / s.scale);
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      best = max(best, cyclic_term(h.torsion[i], g.torsion_moduli[i]));
    }
    return best;
  }
  Rational operator()(const CyclicScaled&) const {
    Rational sum;
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      sum += cyclic_term(h.torsion[i], g.torsion_moduli[i]);
    }
    return sum;
  }
  Rational operator()(const RationalRotation& s) const {
    const Rational x = s.alpha * Rational(h.free.front());
    const Rational frac = x - Rational(x.floor());
    return min(frac, Rational(1) - frac);
  }
};

}  // namespace

std::string NormSpec::type_name() const {
  struct Name {
    const char* operator()(const CappedWeightedL1&) const { return "capped_l1"; }
    const char* operator()(const CappedLInf&) const { return "capped_linf"; }
    const char* operator()(const CyclicScaled&) const { return "cyclic_scaled"; }
    const char* operator()(const RationalRotation&) const { return "rational_rotation"; }
  };
  return std::visit(Name{}, params);
}

void validate_spec(const GroupDescriptor& g, const NormSpec& spec) {
  g.validate();
  std::visit(ShapeCheck{g}, spec.params);
  if (const auto* l1 = std::get_if<CappedWeightedL1>(&spec.params)) {
    for (const auto& w : l1->weights) {
      if (w.sign() <= 0) throw DomainError("capped_l1 weights must be positive, got " + w.str());
    }
  }
  if (const auto* linf = std::get_if<CappedLInf>(&spec.params)) {
    if (linf->scale.sign() <= 0) throw DomainError("capped_linf scale must be positive");
  }
}

Rational base_norm(const GroupDescriptor& g, const NormSpec& spec, const HElement& h) {
  check_conforms(g, h);
  std::visit(ShapeCheck{g}, spec.params);
  return min(Rational(1), std::visit(RawNorm{g, h}, spec.params));
}

AxiomReport validate_norm_spec(const GroupDescriptor& g, const NormSpec& spec,
                               std::size_t sample_count, std::uint64_t seed) {
  constexpr std::uint64_t kRadius = 8;
  AxiomReport report;
  report.samples = sample_count;
  try {
    std::visit(ShapeCheck{g}, spec.params);
  } catch (const std::exception& e) {
    report.violations.push_back({"shape", e.what()});
    return report;
  }

  const std::uint64_t bound = index_bound_for_radius(g, kRadius);
  const std::uint64_t order = group_order(g);
  auto d = [&](const HElement& h) { return base_norm(g, spec, h); };

  if (const Rational d0 = d(HElement::zero(g)); !d0.is_zero()) {
    report.violations.push_back({"identity", "d(0)=" + d0.str()});
  }

  Sampler sampler(seed);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const std::uint64_t first = (order != 0 && i < order) ? i + 1 : sampler.index(bound);
    const HElement a = enumerate_h(g, first);
    const HElement b = enumerate_h(g, sampler.index(bound));
    const Rational da = d(a);
    const Rational db = d(b);
    if (da.sign() < 0 || da > Rational(1)) {
      report.violations.push_back({"range", "d(" + to_string(a) + ")=" + da.str()});
    }
    if (const Rational dn = d(negate(g, a)); dn != da) {
      report.violations.push_back(
          {"symmetry", "d(" + to_string(a) + ")=" + da.str() + " but d(-x)=" + dn.str()});
    }
    const HElement sum = combine(g, a, b);
    if (const Rational ds = d(sum); ds > da + db) {
      report.violations.push_back({"subadditivity", "d(" + to_string(a) + "+" + to_string(b) +
                                                        ")=" + ds.str() + " > " + (da + db).str()});
    }
  }

  // Vanishing scan in enumeration order, so the reported witness is the first one.
  const std::uint64_t scan = order != 0 ? order : bound;
  for (std::uint64_t n = 2; n <= scan; ++n) {
    const HElement h = enumerate_h(g, n);
    if (d(h).is_zero()) {
      report.pseudonorm = true;
      const std::string finding = "pseudonorm: d(" + to_string(h) + ")=0";
      if (spec.is_pseudonorm_variant()) {
        report.flags.push_back(finding);
      } else {
        report.violations.push_back({"positivity", finding});
      }
      break;
    }
  }
  return report;
}

}  // namespace mono
