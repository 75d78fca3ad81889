#include "artinres/fuzz.hpp"

#include <algorithm>
#include <vector>

#include "artinres/algebra.hpp"
#include "artinres/errors.hpp"
#include "artinres/module.hpp"

namespace artinres::fuzz {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MonomialIdeal random_artinian_ideal(const RingSpec& ring, std::uint64_t seed, const IdealShape& shape) {
  Rng rng(seed);
  const std::size_t d = ring.num_vars;
  const std::uint32_t lo = shape.max_exponent >= 2 ? 2 : 1;
  std::vector<std::uint32_t> a(d);
  for (auto& e : a) e = static_cast<std::uint32_t>(rng.between(lo, std::max(lo, shape.max_exponent)));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(Monomial::variable(d, i, a[i]));
  const std::uint64_t extra = shape.max_extra == 0 ? 0 : rng.between(0, shape.max_extra);
  for (std::uint64_t k = 0; k < extra; ++k) {
    std::vector<std::uint32_t> e(d);
    std::size_t support = 0;
    for (std::size_t i = 0; i < d; ++i) {
      e[i] = static_cast<std::uint32_t>(rng.between(0, a[i] - 1));
      if (e[i] > 0) ++support;
    }
    // Mixed monomials only; a pure power below x_i^{a_i} would just lower a_i.
    if (support >= 2) gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal random_non_gorenstein_ideal(const RingSpec& ring, std::uint64_t seed, const IdealShape& shape,
                                          std::uint32_t max_tries) {
  for (std::uint32_t t = 0; t < max_tries; ++t) {
    MonomialIdeal ideal = random_artinian_ideal(ring, t == 0 ? seed : derive_seed(seed, t), shape);
    auto alg = ArtinianAlgebra::build(ideal);
    if (socle(ring_module(alg)).type >= 2) return ideal;
  }
  throw ResourceError("no non-Gorenstein ideal found for the given seed");
}

MonomialIdeal random_radical_ideal(const RingSpec& ring, std::uint64_t seed, std::uint32_t max_generators) {
  Rng rng(seed);
  const std::size_t d = ring.num_vars;
  std::vector<Monomial> gens;
  const std::uint64_t count = rng.between(1, std::max<std::uint32_t>(1, max_generators));
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<std::uint32_t> e(d, 0);
    bool any = false;
    for (std::size_t i = 0; i < d; ++i) {
      e[i] = rng.coin() ? 1 : 0;
      any = any || e[i] != 0;
    }
    if (!any) e[rng.between(0, d - 1)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::pair<MonomialIdeal, MonomialIdeal> random_primary_pair(const RingSpec& ring, std::uint64_t seed,
                                                            const IdealShape& shape) {
  Rng rng(seed);
  const std::uint64_t s1 = rng.between(0, ~0ULL - 1), s2 = rng.between(0, ~0ULL - 1);
  IdealShape factor = shape;
  // Factors may contain variables themselves, so allow exponent 1.
  auto draw = [&](std::uint64_t s) {
    Rng inner(s);
    const std::size_t d = ring.num_vars;
    std::vector<Monomial> gens;
    std::vector<std::uint32_t> a(d);
    for (auto& e : a) e = static_cast<std::uint32_t>(inner.between(1, std::max<std::uint32_t>(1, factor.max_exponent)));
    for (std::size_t i = 0; i < d; ++i) gens.push_back(Monomial::variable(d, i, a[i]));
    const std::uint64_t extra = factor.max_extra == 0 ? 0 : inner.between(0, factor.max_extra);
    for (std::uint64_t k = 0; k < extra; ++k) {
      std::vector<std::uint32_t> e(d);
      for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<std::uint32_t>(inner.between(0, a[i] - 1));
      Monomial m(std::move(e));
      if (m.degree() > 0) gens.push_back(m);
    }
    return MonomialIdeal(ring, std::move(gens));
  };
  return {draw(s1), draw(s2)};
}

}  // namespace artinres::fuzz
