#pragma once

// Seeded generators of random monomial ideals. Every generator is a pure function of
// its arguments; draws use std::mt19937_64 with modulo reduction so the sequences are
// identical across standard libraries.

#include <cstdint>
#include <random>
#include <utility>

#include "artinres/monomial.hpp"

namespace artinres::fuzz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct IdealShape {
  /// Pure powers x_i^{a_i} with 1 <= a_i <= max_exponent.
  std::uint32_t max_exponent = 3;
  /// Extra mixed generators drawn inside the box below the pure powers.
  std::uint32_t max_extra = 3;
};

/// m-primary: forced pure powers plus a random antichain inside their box.
MonomialIdeal random_artinian_ideal(const RingSpec& ring, std::uint64_t seed, const IdealShape& shape = {});

/// A random artinian ideal whose quotient has type >= 2, retrying derived seeds.
/// Throws ResourceError if max_tries draws are all Gorenstein.
MonomialIdeal random_non_gorenstein_ideal(const RingSpec& ring, std::uint64_t seed, const IdealShape& shape = {},
                                          std::uint32_t max_tries = 200);

/// Squarefree monomials of degree >= 1, minimalized; never the zero or unit ideal.
MonomialIdeal random_radical_ideal(const RingSpec& ring, std::uint64_t seed, std::uint32_t max_generators = 4);

/// Two m-primary factors (J, K) for product families.
std::pair<MonomialIdeal, MonomialIdeal> random_primary_pair(const RingSpec& ring, std::uint64_t seed,
                                                            const IdealShape& shape = {});

/// A seed derived from (seed, index) for families of independent draws.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace artinres::fuzz
