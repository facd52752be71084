#pragma once

#include <cstdint>
#include <random>

#include "mono/group.hpp"
#include "mono/rational.hpp"

namespace mono {

/// Reproducible sample stream. The engine is the 64-bit MMIX linear congruential generator
///   x' = 6364136223846793005 * x + 1442695040888963407  (mod 2^64),
/// seeded with `seed`; each draw uses the top 32 bits of the next state reduced modulo the
/// range. No std distributions are involved, so the stream is identical across standard
/// library implementations.
class Sampler {
 public:
  using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                                 1442695040888963407ULL, 0ULL>;

  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return (engine_() >> 32) % bound; }
  /// Enumeration index in [1, bound].
  std::uint64_t index(std::uint64_t bound) { return 1 + below(bound); }
  /// Integer in [-range, range].
  std::int64_t symmetric(std::int64_t range) {
    return static_cast<std::int64_t>(below(2 * static_cast<std::uint64_t>(range) + 1)) - range;
  }

 private:
  Engine engine_;
};

/// Sampling knobs. Elements are drawn from enumeration indices 1..index_bound_for_radius(radius)
/// and c-powers from [-max_k, max_k].
struct SampleScheme {
  std::uint64_t radius = 3;
  std::int64_t max_k = 3;
};

/// Draws elements of H and H (+) C from a Sampler. The indexed draws h(i), x(i) walk the whole
/// group first when H is finite, so every coset representative is covered.
class ElementSampler {
 public:
  ElementSampler(const GroupDescriptor& g, std::uint64_t seed, SampleScheme scheme)
      : g_(g),
        sampler_(seed),
        bound_(index_bound_for_radius(g, scheme.radius)),
        order_(group_order(g)),
        max_k_(scheme.max_k) {}

  HElement h(std::size_t i) {
    if (order_ != 0 && i < order_) return enumerate_h(g_, i + 1);
    return h();
  }
  HElement h() { return enumerate_h(g_, sampler_.index(bound_)); }
  BigInt k() { return BigInt(static_cast<long>(sampler_.symmetric(max_k_))); }

  ExtElement x(std::size_t i) {
    HElement hh = h(i);
    return {std::move(hh), k()};
  }
  ExtElement x() {
    HElement hh = h();
    return {std::move(hh), k()};
  }

  std::uint64_t below(std::uint64_t n) { return sampler_.below(n); }

 private:
  GroupDescriptor g_;
  Sampler sampler_;
  std::uint64_t bound_;
  std::uint64_t order_;
  std::int64_t max_k_;
};

}  // namespace mono
