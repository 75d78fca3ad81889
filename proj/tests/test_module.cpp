#include <set>

#include "doctest.h"

#include "artinres/claims.hpp"
#include "artinres/errors.hpp"
#include "artinres/ideal_io.hpp"
#include "artinres/module.hpp"

using namespace artinres;

namespace {

MonomialIdeal ideal(const std::string& gens, std::size_t d) {
  IdealSyntax syn;
  const std::vector<std::string> names = {"x", "y", "z", "w"};
  syn.vars.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(d));
  return parse_ideal_text(gens, syn);
}

// Standard monomials by enumeration inside the box given by the pure powers.
std::set<std::vector<std::uint32_t>> standard_monomials(const MonomialIdeal& i) {
  const std::size_t d = i.ring().num_vars;
  std::vector<std::uint32_t> box(d, 0);
  for (const Monomial& g : i.generators()) {
    if (g.is_pure_power()) box[g.first_variable()] = g.degree();
  }
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(d, 0);
  while (true) {
    if (!i.contains(Monomial(e))) out.insert(e);
    std::size_t v = 0;
    while (v < d && e[v] + 1 == box[v]) e[v++] = 0;
    if (v == d) break;
    ++e[v];
  }
  return out;
}

// Monomials m of R with x_v m = 0 for every v: a basis of the monomial socle.
std::size_t monomial_socle_size(const MonomialIdeal& i) {
  std::size_t n = 0;
  for (const auto& e : standard_monomials(i)) {
    bool killed = true;
    for (std::size_t v = 0; v < e.size(); ++v) killed = killed && i.contains(Monomial(e) * Monomial::variable(e.size(), v));
    n += killed;
  }
  return n;
}

}  // namespace

TEST_CASE("standard-monomial basis matches enumeration") {
  for (const auto& [g, d] : std::vector<std::pair<std::string, std::size_t>>{
           {"x^2,x*y,y^2", 2}, {"x^3,y^2,z^2,x*y*z", 3}, {"x^2,y^2,z^2,w^2,x*y", 4}, {"x,y^5", 2}}) {
    const MonomialIdeal i = ideal(g, d);
    auto alg = ArtinianAlgebra::build(i);
    const auto expect = standard_monomials(i);
    REQUIRE(alg->length() == expect.size());
    for (std::size_t b = 0; b < alg->length(); ++b) {
      CHECK(expect.count(alg->monomial(b).exponents()) == 1);
      CHECK(alg->index_of(alg->monomial(b)) == static_cast<std::int64_t>(b));
      if (b > 0) CHECK(alg->degree_of(b - 1) <= alg->degree_of(b));
      for (std::size_t v = 0; v < d; ++v) {
        const Monomial prod = alg->monomial(b) * Monomial::variable(d, v);
        CHECK(alg->times_var(v, b) == alg->index_of(prod));
        CHECK((alg->times_var(v, b) < 0) == i.contains(prod));
      }
    }
  }
  CHECK_THROWS_AS(ArtinianAlgebra::build(ideal("x^2,x*y", 2)), HypothesisError);
  CHECK_THROWS_AS(ArtinianAlgebra::build(ideal("x^800,y^800", 2), 1000), ResourceError);
}

TEST_CASE("socle and type against the monomial oracle") {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"x^2,x*y,y^2", 2}, {"x^3,x^2*y,x*y^2,y^3", 2}, {"x^2,y^2,z^2,w^2,x*y", 4},
      {"x^2,y^2,z^2,w^2,x*y*z", 4}, {"x,y^2,z^3", 3}, {"x^2,y^3", 2}, {"x^2,y^2,z^2,x*y*z", 3}};
  for (const auto& [g, d] : cases) {
    const MonomialIdeal i = ideal(g, d);
    auto alg = ArtinianAlgebra::build(i);
    const SocleData soc = socle(ring_module(alg));
    CHECK(soc.type == monomial_socle_size(i));
    CHECK(ring_type(i) == soc.type);
  }
  auto a1 = ArtinianAlgebra::build(ideal("x^2,y^2,z^2,w^2,x*y", 4));
  CHECK(a1->length() == 12);
  CHECK(socle(ring_module(a1)).type == 2);
  auto a2 = ArtinianAlgebra::build(ideal("x^2,y^2,z^2,w^2,x*y*z", 4));
  CHECK(a2->length() == 14);
  CHECK(socle(ring_module(a2)).type == 3);
}

TEST_CASE("module constructions validate") {
  auto alg = ArtinianAlgebra::build(ideal("x^3,x^2*y,y^2", 2));
  const GradedModule r = ring_module(alg);
  r.validate();
  CHECK(r.length() == alg->length());
  const GradedModule k = residue_field(alg);
  k.validate();
  CHECK(k.length() == 1);
  CHECK(socle(k).type == 1);
  const GradedModule c = cyclic_module(alg, ideal("x", 2));
  c.validate();
  CHECK(c.length() == standard_monomials(ideal("x,y^2", 2)).size());
  const GradedModule f = free_module(alg, {0, 1});
  f.validate();
  CHECK(f.length() == 2 * alg->length());
  CHECK(minimal_generator_count(f) == 2);
  CHECK(generator_degrees(f) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("Matlis duality") {
  for (const auto& [g, d] : std::vector<std::pair<std::string, std::size_t>>{
           {"x^2,x*y,y^2", 2}, {"x^2,y^2,z^2,x*y*z", 3}, {"x^3,y^2", 2}}) {
    auto alg = ArtinianAlgebra::build(ideal(g, d));
    const GradedModule w = canonical_module(alg);
    w.validate();
    CHECK(w.length() == alg->length());
    // omega is generated by type(R) elements and its socle is one-dimensional.
    CHECK(minimal_generator_count(w) == socle(ring_module(alg)).type);
    CHECK(socle(w).type == 1);
    const GradedModule m = random_finite_length_module(alg, 4);
    const GradedModule dd = matlis_dual(matlis_dual(m));
    dd.validate();
    CHECK(dd.dims() == m.dims());
    CHECK(minimal_generator_count(matlis_dual(m)) == socle(m).type);
  }
}

TEST_CASE("random modules are deterministic, nonzero and nonfree") {
  auto alg = ArtinianAlgebra::build(ideal_power(maximal_ideal(RingSpec(2)), 3));
  for (std::uint64_t seed : {3u, 7u, 11u, 42u}) {
    const GradedModule a = random_finite_length_module(alg, seed);
    a.validate();
    CHECK(a == random_finite_length_module(alg, seed));
    CHECK(a.length() > 0);
    CHECK(a.length() < minimal_generator_count(a) * alg->length());
  }
}

TEST_CASE("module JSON round trip") {
  auto alg = ArtinianAlgebra::build(ideal("x^2,x*y,y^3", 2));
  const GradedModule m = random_finite_length_module(alg, 9);
  CHECK(module_from_json(alg, module_to_json(m)) == m);
  auto other = ArtinianAlgebra::build(ideal("x^2,y^2", 2));
  CHECK_THROWS_AS(module_from_json(other, module_to_json(m)), InputError);
  auto j = module_to_json(m);
  j["dims"][0] = 99;
  CHECK_THROWS_AS(module_from_json(alg, j), InputError);
}

TEST_CASE("named modules") {
  auto alg = ArtinianAlgebra::build(ideal_power(maximal_ideal(RingSpec(2)), 2));
  CHECK(named_module(alg, "k").length() == 1);
  CHECK(named_module(alg, "R").length() == 3);
  CHECK(named_module(alg, "omega").length() == 3);
  CHECK(named_module(alg, "R/(x1)").length() == 2);
  CHECK(named_module(alg, "R/(x1*x2)").length() == 3);
  CHECK_THROWS_AS(named_module(alg, "bogus"), InputError);
}
