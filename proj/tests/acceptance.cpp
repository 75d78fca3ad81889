// Acceptance criteria, one line per criterion. Every comparison is exact integer
// equality or an exact integer inequality; expected values are pinned constants or come
// from enumeration oracles written here, never from the code under test.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "artinres/claims.hpp"
#include "artinres/errors.hpp"
#include "artinres/fuzz.hpp"
#include "artinres/ideal_io.hpp"
#include "artinres/koszul.hpp"
#include "artinres/poincare.hpp"
#include "artinres/resolution.hpp"
#include "artinres/tor.hpp"

using namespace artinres;

namespace {

using U64s = std::vector<std::uint64_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void info(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string show(const U64s& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string show(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

MonomialIdeal xyzw(const std::string& gens, std::size_t d) {
  const std::vector<std::string> names = {"x", "y", "z", "w"};
  return parse_ideal_text(gens, {std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(d))});
}

MonomialIdeal power(std::size_t d, std::size_t n) { return ideal_power(maximal_ideal(RingSpec(d)), n); }

std::int64_t s64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t choose(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Hilbert function of S/I in degree j, by enumerating monomials of degree j.
std::int64_t hilbert(const MonomialIdeal& i, std::int64_t j) {
  const std::size_t d = i.ring().num_vars;
  std::int64_t count = 0;
  std::vector<std::uint32_t> e(d, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
    if (v + 1 == d) {
      e[v] = left;
      count += !i.contains(Monomial(e));
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[v] = a;
      rec(v + 1, left - a);
    }
  };
  if (j >= 0) rec(0, static_cast<std::uint32_t>(j));
  return count;
}

// Socle size of S/I over the monomial basis: standard monomials killed by every variable.
std::size_t monomial_socle(const MonomialIdeal& i, std::uint32_t max_degree) {
  const std::size_t d = i.ring().num_vars;
  std::size_t n = 0;
  for (std::uint32_t deg = 0; deg <= max_degree; ++deg) {
    std::vector<std::uint32_t> e(d, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
      if (v + 1 == d) {
        e[v] = left;
        const Monomial m(e);
        if (i.contains(m)) return;
        bool killed = true;
        for (std::size_t w = 0; w < d; ++w) killed = killed && i.contains(m * Monomial::variable(d, w));
        n += killed;
        return;
      }
      for (std::uint32_t a = 0; a <= left; ++a) {
        e[v] = a;
        rec(v + 1, left - a);
      }
    };
    rec(0, deg);
  }
  return n;
}

std::vector<MonomialIdeal> builtin_rings() {
  return {power(2, 2), power(2, 3), power(3, 2), xyzw("x^2,y^2,z^2,w^2,x*y", 4), xyzw("x^2,y^2,z^2,w^2,x*y*z", 4),
          xyzw("x^2,x*y,y^3", 2), xyzw("x^2,y^2,z^2,x*y*z", 3)};
}

Outcome ac1() {
  Outcome o;
  const U64s b = betti_canonical(power(2, 2), 5);
  o.expect(b == U64s{2, 3, 6, 12, 24, 48}, "beta(w) = " + show(b) + ", expected (2,3,6,12,24,48)");
  for (std::size_t i = 1; i < b.size(); ++i) {
    o.expect(b[i] == (std::uint64_t{1} << (i - 1)) * 3, "beta_" + std::to_string(i) + " != 2^{i-1}*3");
  }
  if (o.pass) o.info("beta(w) = " + show(b));
  return o;
}

Outcome ac2() {
  Outcome o;
  struct Case {
    MonomialIdeal ideal;
    U64s totals;
    // (i, j, beta_{i,j}) that must be the complete nonzero table for i >= 1 when listed.
    std::vector<std::tuple<std::size_t, std::int64_t, std::uint64_t>> graded;
  };
  const std::vector<Case> cases = {
      {power(2, 2), {1, 3, 2}, {{1, 2, 3}, {2, 3, 2}}},
      {power(3, 2), {1, 6, 8, 3}, {{1, 2, 6}, {2, 3, 8}, {3, 4, 3}}},
      // F_1 from the five quadrics, F_3 and F_4 from the degrees of the entries of the last
      // matrix (w^2, z^2, x, y); F_2 is checked against the Hilbert series below.
      {xyzw("x^2,y^2,z^2,w^2,x*y", 4), {1, 5, 9, 7, 2}, {{1, 2, 5}, {3, 5, 4}, {3, 6, 3}, {4, 7, 2}}},
  };
  for (const Case& c : cases) {
    const BettiTable t = graded_betti(c.ideal);
    o.expect(t.totals() == c.totals, c.ideal.to_string() + " totals " + show(t.totals()) + " != " + show(c.totals));
    for (const auto& [i, j, v] : c.graded) {
      o.expect(t.at(i, j) == v, c.ideal.to_string() + " beta_{" + std::to_string(i) + "," + std::to_string(j) +
                                    "} = " + std::to_string(t.at(i, j)) + " != " + std::to_string(v));
    }
    // sum_i (-1)^i beta_{i,j} = [t^j] H_{S/I}(t) (1-t)^d, for every j.
    const std::size_t d = c.ideal.ring().num_vars;
    for (std::int64_t j = 0; j <= static_cast<std::int64_t>(c.ideal.lcm().degree()) + 1; ++j) {
      std::int64_t alt = 0, kpoly = 0;
      for (std::size_t i = 0; i <= d; ++i) alt += (i % 2 ? -1 : 1) * s64(t.at(i, j));
      for (std::size_t s = 0; s <= d; ++s) kpoly += (s % 2 ? -1 : 1) * s64(choose(d, s)) * hilbert(c.ideal, j - s64(s));
      o.expect(alt == kpoly, c.ideal.to_string() + " graded Euler characteristic at j=" + std::to_string(j));
    }
  }
  const BettiTable t = graded_betti(xyzw("x^2,y^2,z^2,w^2,x*y", 4));
  o.expect(t.at(2, 3) == 2 && t.at(2, 4) == 7, "F_2 of (x^2,y^2,z^2,w^2,xy) != S(-3)^2 + S(-4)^7");
  if (o.pass) o.info("(1,3,2), (1,6,8,3), (1,5,9,7,2) with graded positions");
  return o;
}

Outcome ac3() {
  Outcome o;
  const U64s a = betti_canonical(xyzw("x^2,y^2,z^2,w^2,x*y", 4), 1);
  const U64s b = betti_canonical(xyzw("x^2,y^2,z^2,w^2,x*y*z", 4), 1);
  o.expect(a == U64s{2, 3}, "(x^2,y^2,z^2,w^2,xy): " + show(a) + " != (2,3)");
  o.expect(b == U64s{3, 6}, "(x^2,y^2,z^2,w^2,xyz): " + show(b) + " != (3,6)");
  if (o.pass) o.info("(2,3) and (3,6)");
  return o;
}

const std::vector<std::pair<std::size_t, std::size_t>> kGrid = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};

Outcome ac4() {
  Outcome o;
  std::string vals;
  for (auto [d, n] : kGrid) {
    const MonomialIdeal i = power(d, n);
    // R side: minimal resolution of w over R. S side: graded Betti numbers of S/m^n.
    const U64s w = betti_canonical(i, 1);
    const std::int64_t r_side = s64(w[1]) - s64(w[0]);
    const BettiTable t = graded_betti(i);
    // rank Syz_{d-1}(R) over S from the tail of the minimal S-resolution.
    std::int64_t rank = 0;
    for (std::size_t k = d - 1; k <= d; ++k) rank += ((k - (d - 1)) % 2 ? -1 : 1) * s64(t.total(k));
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
    o.expect(r_side == rank, tag + ": " + std::to_string(r_side) + " != " + std::to_string(rank));
    o.expect(rank >= s64(d) - 1, tag + ": rank " + std::to_string(rank) + " < d-1");
    o.expect(syzygy_rank(t, d - 1) == rank, tag + ": library syzygy_rank disagrees with the alternating tail sum");
    vals += tag + ":" + std::to_string(r_side) + "=" + std::to_string(rank) + " ";
  }
  if (o.pass) o.info(vals);
  return o;
}

Outcome ac5() {
  Outcome o;
  std::string vals;
  for (auto [d, n] : kGrid) {
    const U64s w = betti_canonical(power(d, n), 1);
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + ")";
    const std::uint64_t b0 = choose(d + n - 2, d - 1);
    o.expect(w[0] == b0, tag + ": beta_0 = " + std::to_string(w[0]) + " != C(d+n-2,d-1) = " + std::to_string(b0));
    o.expect(w[1] >= 2 * d - 1, tag + ": beta_1 = " + std::to_string(w[1]) + " < 2d-1 = " + std::to_string(2 * d - 1));
    if (n > 2) {
      o.expect(w[1] >= 2 * d + 1,
               tag + ": beta_1 = " + std::to_string(w[1]) + " < 2d+1 = " + std::to_string(2 * d + 1) + " (n > 2)");
    }
    vals += tag + ":" + show(w) + " ";
  }
  o.info(vals);
  return o;
}

Outcome ac6() {
  Outcome o;
  for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    auto alg = ArtinianAlgebra::build(power(d, n));
    for (const char* name : {"k", "omega"}) {
      const GradedModule m = named_module(alg, name);
      const auto series = poincare_over_R(m, 6).to_int64(6);
      const U64s direct = resolve(m, 6).betti();
      std::vector<std::int64_t> signed_direct(direct.begin(), direct.end());
      o.expect(series == signed_direct, "(" + std::to_string(d) + "," + std::to_string(n) + ") " + name +
                                            ": series " + show(series) + " != resolution " + show(direct));
    }
  }
  if (o.pass) o.info("k and w through t^6 on (2,2),(2,3),(3,2)");
  return o;
}

Outcome ac7() {
  Outcome o;
  {
    auto alg = ArtinianAlgebra::build(power(2, 2));
    const U64s b = resolve(named_module(alg, "R/(x1*x2)"), 3).betti();
    o.expect(b == U64s{1, 1, 2, 4}, "R/(x1 x2) over R_{2,2}: beta = " + show(b) + " != (1,1,2,4)");
    if (b.size() == 4) {
      o.expect(s64(b[3]) - s64(b[2]) == s64(choose(3, 1)) - 1,
               "beta_3 - beta_2 = " + std::to_string(s64(b[3]) - s64(b[2])) + " != C(3,1)-1 = 2");
    }
    const U64s alt = resolve(named_module(alg, "R/(x1)"), 3).betti();
    o.info("for reference R/(x1) over R_{2,2} gives " + show(alt));
  }
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t n : {2u, 3u}) {
      auto alg = ArtinianAlgebra::build(power(d, n));
      const std::string f = n - 1 == 1 ? "x1" : "x1^" + std::to_string(n - 1);
      const U64s b = resolve(named_module(alg, "R/(" + f + ")"), 2).betti();
      o.expect(s64(b[2]) - s64(b[1]) == s64(d) - 1, "R/(" + f + ") over R_{" + std::to_string(d) + "," +
                                                         std::to_string(n) + "}: beta_2 - beta_1 = " +
                                                         std::to_string(s64(b[2]) - s64(b[1])) + " != d-1");
    }
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  for (std::size_t d = 1; d <= 4; ++d) {
    const MonomialIdeal i = power(d, 2);
    const std::uint64_t t = ring_type(i);
    o.expect(t == d, "type(S/m^2), d=" + std::to_string(d) + ": " + std::to_string(t));
    o.expect(t == monomial_socle(i, 2), "socle oracle disagrees for S/m^2, d=" + std::to_string(d));
  }
  o.expect(ring_type(power(2, 3)) == 3, "type(k[x,y]/m^3) != 3");

  const MonomialIdeal j2 = ideal_power(xyzw("x,y^2,z^3", 3), 2);
  auto alg = ArtinianAlgebra::build(j2);
  const std::size_t type = socle(ring_module(alg)).type;
  o.expect(type == 3, "type(S/J^2) = " + std::to_string(type) + " for J = (x,y^2,z^3)");
  o.expect(type == monomial_socle(j2, alg->ring().num_vars * 12), "socle oracle disagrees for S/J^2");
  // x_i^{a_i} * x with x = prod x_j^{a_j - 1}: each lies outside J^2 and is killed by every variable.
  const std::vector<std::uint32_t> a = {1, 2, 3};
  std::vector<std::uint32_t> base = {0, 1, 2};
  std::vector<std::vector<std::uint32_t>> elems;
  std::string names;
  for (std::size_t v = 0; v < 3; ++v) {
    std::vector<std::uint32_t> e = base;
    e[v] += a[v];
    const Monomial m(e);
    o.expect(!j2.contains(m), m.to_string(j2.ring()) + " lies in J^2");
    for (std::size_t w = 0; w < 3; ++w) {
      o.expect(j2.contains(m * Monomial::variable(3, w)), m.to_string(j2.ring()) + " is not killed by a variable");
    }
    elems.push_back(e);
    names += (names.empty() ? "" : ", ") + m.to_string(j2.ring());
  }
  // Distinct standard monomials are independent, and three of them span a 3-dimensional socle.
  o.expect(elems[0] != elems[1] && elems[1] != elems[2] && elems[0] != elems[2], "socle elements coincide");
  o.expect(elems.size() == type, "socle elements do not span");
  if (o.pass) o.info("type(S/m^2)=d for d<=4, type(k[x,y]/m^3)=3, socle {" + names + "} of S/(x,y^2,z^3)^2");
  return o;
}

Outcome ac9() {
  Outcome o;
  std::size_t violations = 0, by_d[5] = {0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t d = 2 + i % 3;
    auto [j, k] = fuzz::random_primary_pair(RingSpec(d), fuzz::derive_seed(20240607, i), {2, 2});
    const MonomialIdeal jk = ideal_product(j, k);
    const std::uint64_t t = socle(ring_module(ArtinianAlgebra::build(jk))).type;
    ++by_d[d];
    if (t < 2 || (d >= 3 && t < 3)) {
      ++violations;
      o.expect(false, "type(S/JK) = " + std::to_string(t) + " for J=" + j.to_string() + ", K=" + k.to_string());
    }
  }
  std::size_t checked = 0, gated = 0;
  for (std::size_t i = 0; i < 400 && checked < 30; ++i) {
    const std::size_t d = 2 + i % 3;
    const MonomialIdeal j = fuzz::random_radical_ideal(RingSpec(d), fuzz::derive_seed(777, i));
    if (j.is_zero() || j.is_unit()) continue;
    const std::size_t l = height(j);
    if (l < 2) continue;
    for (std::size_t n : {2u, 3u}) {
      const MonomialIdeal jn = ideal_power(j, n);
      std::uint64_t t = 0;
      if (is_artinian(jn)) {
        t = socle(ring_module(ArtinianAlgebra::build(jn))).type;
      } else {
        const BettiTable bt = graded_betti(jn);
        if (!is_cohen_macaulay(jn, bt)) {
          ++gated;
          continue;
        }
        t = cm_type_via_S(jn, bt);
      }
      ++checked;
      const std::uint64_t bound = choose(n + l - 2, l - 1);
      if (t < bound) {
        ++violations;
        o.expect(false, "type(S/J^" + std::to_string(n) + ") = " + std::to_string(t) + " < " + std::to_string(bound) +
                            " for J=" + j.to_string());
      }
    }
  }
  o.expect(checked > 0, "no radical case passed the CM/artinian gates");
  o.info("100 products (d=2:" + std::to_string(by_d[2]) + ", 3:" + std::to_string(by_d[3]) + ", 4:" +
         std::to_string(by_d[4]) + "), " + std::to_string(checked) + " radical powers checked, " +
         std::to_string(gated) + " gated out, violations " + std::to_string(violations));
  return o;
}

Outcome ac10() {
  Outcome o;
  std::vector<MonomialIdeal> rings;
  for (const MonomialIdeal& i : builtin_rings()) rings.push_back(i);
  for (std::size_t s = 0; s < 50; ++s) {
    const std::size_t d = 2 + s % 2;
    const fuzz::IdealShape shape = d == 2 ? fuzz::IdealShape{4, 3} : fuzz::IdealShape{2, 2};
    rings.push_back(fuzz::random_non_gorenstein_ideal(RingSpec(d), fuzz::derive_seed(31337, s), shape));
  }
  std::size_t obs_bad = 0, tor_bad = 0, oracle_bad = 0, cases = 0;
  std::string first_tor;
  for (const MonomialIdeal& i : rings) {
    auto alg = ArtinianAlgebra::build(i);
    if (socle(ring_module(alg)).type < 2) continue;
    ++cases;
    const GradedModule w = canonical_module(alg);
    const U64s b = resolve(w, 4).betti();
    // Betti alternating sums: beta_n >= sum_{i<n} (-1)^{n-i+1} beta_i, +2 for even n.
    for (std::size_t n = 1; n <= 4; ++n) {
      std::int64_t rhs = n % 2 == 0 ? 2 : 0;
      for (std::size_t k = 0; k < n; ++k) rhs += ((n - k + 1) % 2 ? -1 : 1) * s64(b[k]);
      if (s64(b[n]) < rhs) ++obs_bad;
    }
    // Tor against w for M in {k, R, w}: sum_{i<=n} (-1)^i l(Tor_i) >= 2 l(M) (n even), >= 0 (n odd).
    for (const char* name : {"k", "R", "omega"}) {
      const GradedModule m = named_module(alg, name);
      const auto lengths = tor_profile(m, w, 4).lengths;
      std::int64_t sum = 0;
      for (std::size_t n = 0; n <= 4; ++n) {
        sum += (n % 2 ? -1 : 1) * s64(lengths[n]);
        const std::int64_t rhs = n % 2 == 0 ? 2 * s64(m.length()) : 0;
        if (sum < rhs) {
          ++tor_bad;
          if (first_tor.empty()) {
            first_tor = "M=" + std::string(name) + " over " + i.to_string() + ", n=" + std::to_string(n) + ": " +
                        std::to_string(sum) + " < " + std::to_string(rhs);
          }
        }
      }
      if (std::string(name) == "k") {
        if (lengths != b) ++oracle_bad;
      }
    }
  }
  o.expect(obs_bad == 0, std::to_string(obs_bad) + " Betti alternating-sum violations");
  o.expect(tor_bad == 0, std::to_string(tor_bad) + " alternating Tor-length violations, first: " + first_tor);
  o.expect(oracle_bad == 0, std::to_string(oracle_bad) + " Tor(k,w) vs resolve(w) mismatches");
  o.info(std::to_string(cases) + " non-Gorenstein rings; Betti-sum violations " + std::to_string(obs_bad) +
         ", Tor oracle mismatches " + std::to_string(oracle_bad));
  return o;
}

Outcome ac11() {
  Outcome o;
  for (const char* g : {"x^2,y^2,z^2,w^2,x*y", "x^2,y^2,z^2,w^2,x*y*z"}) {
    const MonomialIdeal i = xyzw(g, 4);
    const U64s w = betti_canonical(i, 1);
    const std::string rule = w[1] < 8 ? "none" : "inconclusive";
    o.expect(rule == "none", std::string(g) + ": beta_1(w) = " + std::to_string(w[1]) + ", rule gives " + rule);
    const ClaimResult r = check_semidualizing_screen(i, "none");
    o.expect(r.computed.value("screen", std::string()) == "none",
             std::string(g) + ": screen reports " + r.computed.value("screen", std::string("?")));
  }
  if (o.pass) o.info("both rings: none (beta_1 = 3, 6 < 8)");
  return o;
}

Outcome ac12() {
  Outcome o;
  std::size_t checked = 0;
  for (const MonomialIdeal& i : builtin_rings()) {
    auto alg = ArtinianAlgebra::build(i);
    const ResolutionR res = resolve(canonical_module(alg), 4);
    const U64s b = res.betti();
    const std::int64_t len = s64(alg->length());
    for (std::size_t n = 1; n <= 4; ++n) {
      std::int64_t alt = n % 2 == 0 ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) alt += ((n - 1 - k) % 2 ? -1 : 1) * s64(b[k]);
      const std::int64_t lhs = s64(res.syzygies[n].length());
      o.expect(lhs == len * alt, i.to_string() + ", n=" + std::to_string(n) + ": l(Syz_n) = " + std::to_string(lhs) +
                                     " != " + std::to_string(len * alt));
      ++checked;
    }
  }
  if (o.pass) o.info(std::to_string(checked) + " identities on the built-in rings");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"canonical Betti sequence of k[x,y]/m^2", ac1},
      {"Koszul Betti tables over S", ac2},
      {"canonical presentations of the 4-variable examples", ac3},
      {"R-side beta_1(w)-beta_0(w) equals S-side rank Syz_{d-1}", ac4},
      {"beta_0(w) binomial and beta_1(w) lower bounds on R_{d,n}", ac5},
      {"Golod Poincare series vs direct resolutions", ac6},
      {"Betti gaps of R/(x1 x2) and R/(x1^{n-1})", ac7},
      {"type computations and explicit socle basis", ac8},
      {"type bounds for products and radical powers (fuzz)", ac9},
      {"alternating Tor/Betti inequalities against w (fuzz)", ac10},
      {"semidualizing screen on the 4-variable examples", ac11},
      {"length of Syz_n(w) from Betti numbers", ac12},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("AC%02zu %s  [tol=exact] %s: %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.c_str());
  }
  std::printf("acceptance: %zu of %zu criteria pass\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
