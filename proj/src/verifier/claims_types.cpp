#include <algorithm>

#include "artinres/errors.hpp"
#include "artinres/fuzz.hpp"
#include "artinres/koszul.hpp"
#include "internal.hpp"

namespace artinres {

using detail::json_list;
using detail::ring_label;

namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

struct TypeInfo {
  bool known = false;
  std::uint64_t type = 0;
  std::string route;
  bool cohen_macaulay = false;
};

TypeInfo type_info(const MonomialIdeal& ideal) {
  TypeInfo info;
  if (is_artinian(ideal)) {
    info.known = true;
    info.cohen_macaulay = true;
    info.type = ring_type(ideal, &info.route);
    return info;
  }
  const BettiTable t = graded_betti(ideal);
  info.cohen_macaulay = is_cohen_macaulay(ideal, t);
  if (info.cohen_macaulay) {
    info.known = true;
    info.route = "koszul";
    info.type = cm_type_via_S(ideal, t);
  }
  return info;
}

void put_type(ClaimBuilder& b, const TypeInfo& info) {
  b.value("cohen_macaulay", info.cohen_macaulay);
  if (info.known) b.value("type", info.type).value("type_route", info.route);
}

MonomialIdeal prime_of(const RingSpec& ring, const std::vector<std::size_t>& support) {
  std::vector<Monomial> gens;
  for (std::size_t v : support) gens.push_back(Monomial::variable(ring.num_vars, v));
  return MonomialIdeal(ring, gens);
}

}  // namespace

MonomialIdeal localize_at(const MonomialIdeal& j, const std::vector<std::size_t>& support) {
  const std::size_t d = j.ring().num_vars;
  std::vector<bool> keep(d, false);
  for (std::size_t v : support) keep.at(v) = true;
  std::vector<Monomial> gens;
  for (const Monomial& g : j.generators()) {
    std::vector<std::uint32_t> e(d, 0);
    for (std::size_t v = 0; v < d; ++v) e[v] = keep[v] ? g[v] : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(j.ring(), gens);
}

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& j) {
  const std::size_t d = j.ring().num_vars;
  if (d > 16) throw ResourceError("minimal primes are enumerated only for d <= 16");
  if (j.is_zero() || j.is_unit()) throw HypothesisError("minimal primes of the zero or unit ideal");
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : j.generators()) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < d; ++v) {
      if (g[v] > 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  const std::uint32_t full = 1u << d;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & mask) != 0; })) continue;
    covers.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t o) { return o != c && (o & c) == o; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < d; ++v) {
      if (c & (1u << v)) vars.push_back(v);
    }
    out.push_back(vars);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_monomial_complete_intersection(const MonomialIdeal& j) {
  const auto& g = j.generators();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      for (std::size_t v = 0; v < j.ring().num_vars; ++v) {
        if (g[a][v] > 0 && g[b][v] > 0) return false;
      }
    }
  }
  return true;
}

ClaimResult check_type_product(const MonomialIdeal& j, const MonomialIdeal& k) {
  const std::size_t d = j.ring().num_vars;
  ClaimBuilder b("type-product", "Prop. 51: type(S/KJ) >= 2 type(S); Prop. her(i): type(S/JK) >= 3 when d > 2",
                 ring_label(j) + " as J, K=" + k.to_string());
  if (!is_artinian(j) || !is_artinian(k) || j.ring() != k.ring()) {
    b.skip("J and K must be m-primary in the same ring");
    return b.finish();
  }
  const MonomialIdeal i = ideal_product(j, k);
  const TypeInfo info = type_info(i);
  b.value("JK", i.to_string());
  put_type(b, info);
  b.ge("type(S/JK) >= 2", as_int(info.type), 2);
  if (d > 2) b.ge("d > 2: type(S/JK) >= 3", as_int(info.type), 3);
  return b.finish();
}

ClaimResult check_m_times_primary(std::size_t t, const MonomialIdeal& k) {
  const RingSpec& ring = k.ring();
  const std::size_t d = ring.num_vars;
  ClaimBuilder b("m-times-primary",
                 "Remark i=jkr(i): type(S/m^t K) >= mu(m^{t-1} K) >= d; Observation genmax(ii)",
                 ring_label(k) + " as K, t=" + std::to_string(t));
  if (t < 1 || !is_artinian(k)) {
    b.skip("needs t >= 1 and K m-primary");
    return b.finish();
  }
  const MonomialIdeal m = maximal_ideal(ring);
  const MonomialIdeal i = ideal_product(ideal_power(m, t), k);
  const std::size_t mu = ideal_product(ideal_power(m, t - 1), k).num_generators();
  const TypeInfo info = type_info(i);
  put_type(b, info);
  b.value("mu(m^{t-1}K)", mu);
  b.ge("type(S/m^t K) >= mu(m^{t-1} K)", as_int(info.type), as_int(mu));
  b.ge("mu(m^{t-1} K) >= d", as_int(mu), as_int(d));
  if (d > 1) b.ge("d > 1: S/m^t K not Gorenstein", as_int(info.type), 2);
  return b.finish();
}

ClaimResult check_radical_power(const MonomialIdeal& j, std::size_t n) {
  ClaimBuilder b("radical-power",
                 "Prop. gj=k / Observation E: radical J of height l > 1: type(S/J^n) >= C(n+l-2,l-1), not Gorenstein",
                 ring_label(j) + " as J, n=" + std::to_string(n));
  if (j.is_zero() || j.is_unit() || !is_radical(j)) {
    b.skip("J is not a proper radical ideal");
    return b.finish();
  }
  const std::size_t l = height(j);
  b.value("height", l);
  if (l < 2 || n < 2) {
    b.skip("needs height >= 2 and n >= 2");
    return b.finish();
  }
  const MonomialIdeal i = ideal_power(j, n);
  const TypeInfo info = type_info(i);
  put_type(b, info);
  if (!info.known) {
    b.skip("S/J^n is neither artinian nor Cohen-Macaulay; type not computable here");
    return b.finish();
  }
  b.ge("type(S/J^n) >= C(n+l-2, l-1)", as_int(info.type), as_int(binomial(n + l - 2, l - 1)));
  b.ge("type(S/J^n) >= Ht(J)", as_int(info.type), as_int(l));
  b.ge("S/J^n not Gorenstein", as_int(info.type), 2);
  return b.finish();
}

ClaimResult check_ci_power(const std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p) {
  const std::size_t d = a.size();
  const RingSpec ring(d, p);
  const MonomialIdeal j = pure_power_ideal(ring, a);
  ClaimBuilder b("ci-power",
                 "Cor. ci: type(S/J^n) >= Ht(J), type(S/J^2) = Ht(J); Discussion: x_i^{a_i} prod_j x_j^{a_j - 1} is a "
                 "socle basis of S/J^2",
                 ring_label(j) + " as J, n=" + std::to_string(n));
  if (n < 2) {
    b.skip("needs n > 1");
    return b.finish();
  }
  const MonomialIdeal i = ideal_power(j, n);
  auto alg = ArtinianAlgebra::build(i);
  const SocleData soc = socle(ring_module(alg));
  b.value("type", soc.type);
  b.ge("type(S/J^n) >= Ht(J)", as_int(soc.type), as_int(d));
  if (n != 2) return b.finish();
  b.eq("type(S/J^2) == Ht(J)", as_int(soc.type), as_int(d));
  std::vector<std::uint32_t> base(d);
  for (std::size_t v = 0; v < d; ++v) base[v] = a[v] - 1;
  const Monomial x(base);
  std::vector<std::int64_t> indices;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < d; ++v) {
    const Monomial e = Monomial::variable(d, v, a[v]) * x;
    const std::string name = e.to_string(ring);
    elems.push_back(name);
    const std::int64_t idx = alg->index_of(e);
    b.truth(name + " is nonzero in S/J^2", idx >= 0);
    if (idx < 0) continue;
    bool killed = true;
    for (std::size_t w = 0; w < d; ++w) killed = killed && alg->times_var(w, static_cast<std::size_t>(idx)) < 0;
    b.truth(name + " is killed by m", killed);
    indices.push_back(idx);
  }
  b.value("socle_elements", elems);
  std::sort(indices.begin(), indices.end());
  b.truth("elements are distinct standard monomials (independent)",
          std::adjacent_find(indices.begin(), indices.end()) == indices.end() && indices.size() == d);
  b.eq("number of elements == socle dimension (spanning)", as_int(indices.size()), as_int(soc.type));
  return b.finish();
}

ClaimResult check_locally_ci(const MonomialIdeal& j, std::size_t n) {
  const std::size_t d = j.ring().num_vars;
  ClaimBuilder b("locally-ci",
                 "Prop. locally / Observation F: generically CI J of height 1 < l < d: S/J^n not Gorenstein, "
                 "type >= l if CM, type(S/J^2) = l if S/J^2 is CM",
                 ring_label(j) + " as J, n=" + std::to_string(n));
  const std::size_t l = height(j);
  b.value("height", l);
  if (l < 2 || l >= d || n < 2) {
    b.skip("needs 1 < Ht(J) < d and n > 1");
    return b.finish();
  }
  const auto primes = minimal_primes(j);
  bool generic_ci = true;
  for (const auto& prime : primes) generic_ci = generic_ci && is_monomial_complete_intersection(localize_at(j, prime));
  b.value("generically_ci", generic_ci);
  if (!generic_ci) {
    b.skip("J is not generically a complete intersection");
    return b.finish();
  }
  const TypeInfo info = type_info(ideal_power(j, n));
  put_type(b, info);
  if (!info.cohen_macaulay) {
    b.note("S/J^n is not Cohen-Macaulay, hence not Gorenstein");
    return b.finish();
  }
  b.ge("S/J^n not Gorenstein", as_int(info.type), 2);
  b.ge("type(S/J^n) >= Ht(J)", as_int(info.type), as_int(l));
  if (n == 2) b.eq("type(S/J^2) == Ht(J)", as_int(info.type), as_int(l));
  return b.finish();
}

ClaimResult check_beta_d_minus_1(std::size_t t, const MonomialIdeal& k) {
  const RingSpec& ring = k.ring();
  const std::size_t d = ring.num_vars;
  ClaimBuilder b("beta-d-minus-1", "Cor. bd: beta_{d-1}(S/m^t K) >= 2d-1, beta_d(S/m^t K) >= mu(m^{t-1}K) >= d",
                 ring_label(k) + " as K, t=" + std::to_string(t));
  if (t < 1 || d < 2 || !is_artinian(k)) {
    b.skip("needs t >= 1, d >= 2 and K m-primary");
    return b.finish();
  }
  const MonomialIdeal m = maximal_ideal(ring);
  const MonomialIdeal i = ideal_product(ideal_power(m, t), k);
  const BettiTable table = graded_betti(i);
  const std::size_t mu = ideal_product(ideal_power(m, t - 1), k).num_generators();
  b.value("betti_S", json_list(table.totals())).value("mu(m^{t-1}K)", mu);
  b.ge("beta_{d-1} >= 2d-1", as_int(table.total(d - 1)), as_int(2 * d - 1));
  b.ge("beta_d >= mu(m^{t-1} K)", as_int(table.total(d)), as_int(mu));
  b.ge("mu(m^{t-1} K) >= d", as_int(mu), as_int(d));
  const std::int64_t rank = syzygy_rank(table, d - 1);
  b.eq("beta_{d-1} - beta_d == rank Syz_{d-1}", as_int(table.total(d - 1)) - as_int(table.total(d)), rank);
  b.ge("rank Syz_{d-1} >= d-1", rank, as_int(d - 1));
  return b.finish();
}

ClaimResult check_hilbert_burch_type(const MonomialIdeal& j, const MonomialIdeal& k) {
  ClaimBuilder b("hilbert-burch-type",
                 "Prop. ram / Observation D / Fact c2: height-two I = JK: S/I not Gorenstein; type = mu(I) - 1 >= 2 if CM",
                 ring_label(j) + " as J, K=" + k.to_string());
  if (j.ring() != k.ring() || j.is_unit() || k.is_unit() || j.is_zero() || k.is_zero()) {
    b.skip("J and K must be proper nonzero ideals of one ring");
    return b.finish();
  }
  const MonomialIdeal i = ideal_product(j, k);
  const std::size_t h = height(i);
  b.value("I", i.to_string()).value("height", h).value("mu(I)", i.num_generators());
  if (h != 2) {
    b.skip("height(JK) = " + std::to_string(h) + ", not 2");
    return b.finish();
  }
  const TypeInfo info = type_info(i);
  put_type(b, info);
  if (!info.cohen_macaulay) {
    b.note("S/I is not Cohen-Macaulay, hence not Gorenstein");
    return b.finish();
  }
  b.eq("type(S/I) == mu(I) - 1", as_int(info.type), as_int(i.num_generators()) - 1);
  b.ge("type(S/I) >= 2", as_int(info.type), 2);
  return b.finish();
}

ClaimResult check_minimal_multiplicity(const MonomialIdeal& j, const MonomialIdeal& k) {
  const RingSpec& ring = j.ring();
  ClaimBuilder b("minimal-multiplicity",
                 "Prop. min / Observation G: I = JK with minimal multiplicity: type(S/I) >= Ht(I); equality forces "
                 "regularity",
                 ring_label(j) + " as J, K=" + k.to_string());
  const MonomialIdeal i = ideal_product(j, k);
  const MonomialIdeal m2 = ideal_power(maximal_ideal(ring), 2);
  b.value("I", i.to_string());
  if (!is_artinian(i) || !i.contains(m2)) {
    b.skip("the graded artinian model needs (m/I)^2 = 0");
    return b.finish();
  }
  const std::uint64_t type = ring_type(i);
  const std::size_t h = height(i);
  b.value("type", type).value("height", h);
  b.ge("type(S/I) >= Ht(I)", as_int(type), as_int(h));
  b.eq("type(S/I) == embedding dimension (m^2 = 0)", as_int(type), as_int(ring.num_vars));
  b.note("the ambient ring is a polynomial ring, so equality is consistent with regularity");
  return b.finish();
}

ClaimResult check_prime_times_primary(const std::vector<std::size_t>& support, const MonomialIdeal& k) {
  const RingSpec& ring = k.ring();
  const MonomialIdeal p = prime_of(ring, support);
  ClaimBuilder b("prime-times-primary", "Cor. j=kr: J = P prime, K P-primary: type(S/PK) >= Ht(PK)",
                 ring_label(k) + " as K, P=" + p.to_string());
  if (radical(k) != p) {
    b.skip("K is not P-primary");
    return b.finish();
  }
  const MonomialIdeal i = ideal_product(p, k);
  const TypeInfo info = type_info(i);
  put_type(b, info);
  if (!info.known) {
    b.skip("S/PK is not Cohen-Macaulay; type not computable here");
    return b.finish();
  }
  b.ge("type(S/PK) >= Ht(PK)", as_int(info.type), as_int(height(i)));
  return b.finish();
}

namespace detail {

void register_type_claims(ClaimRegistry& reg) {
  reg.add({"type-product", "Prop. 51; Example 52(iii),(iv); Prop. her(i); Observation D",
           "types of S/JK for m-primary monomial J, K", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](const MonomialIdeal& j, const MonomialIdeal& k) {
               out.push_back(guarded("type-product", "Prop. 51", ring_label(j) + ", K=" + k.to_string(),
                                     [&] { return check_type_product(j, k); }));
             };
             const auto m2 = maximal_ideal(RingSpec(2, cfg.p));
             const auto m3 = maximal_ideal(RingSpec(3, cfg.p));
             add(m2, m2);
             add(m3, m3);
             add(example_ideal(2, cfg.p, "x,y^2"), m2);
             for (std::size_t i = 0; i < 100; ++i) {
               const std::size_t d = 2 + i % 3;
               auto [j, k] = fuzz::random_primary_pair(RingSpec(d, cfg.p), fuzz::derive_seed(cfg.seed, 1000 + i), {2, 2});
               add(j, k);
             }
             // Without the height hypothesis the quotient can be Gorenstein.
             ClaimBuilder b("type-product", "Example 52(i),(ii): the height and l > 1 hypotheses are needed",
                            "J=(x), K=(y) in k[x,y]; J=K=(x) in k[x]", ClaimKind::recorded);
             b.eq("type(k[x,y]/(xy))", as_int(ring_type(example_ideal(2, cfg.p, "x*y"))), 1);
             b.eq("type(k[x]/(x^2))", as_int(ring_type(example_ideal(1, cfg.p, "x^2"))), 1);
             out.push_back(b.finish());
             return out;
           }});

  reg.add({"m-times-primary", "Remark i=jkr; Observation genmax", "type(S/m^t K) >= mu(m^{t-1} K) >= d",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](std::size_t t, const MonomialIdeal& k) {
               out.push_back(guarded("m-times-primary", "Remark i=jkr", ring_label(k) + ", t=" + std::to_string(t),
                                     [&] { return check_m_times_primary(t, k); }));
             };
             add(1, ideal_power(maximal_ideal(RingSpec(2, cfg.p)), 2));
             add(1, maximal_ideal(RingSpec(2, cfg.p)));
             add(1, maximal_ideal(RingSpec(3, cfg.p)));
             for (std::size_t i = 0; i < 5; ++i) {
               add(1, fuzz::random_artinian_ideal(RingSpec(3, cfg.p), fuzz::derive_seed(5, i), {2, 2}));
               add(2, fuzz::random_artinian_ideal(RingSpec(2, cfg.p), fuzz::derive_seed(5, 50 + i), {3, 2}));
             }
             return out;
           }});

  reg.add({"radical-power", "Prop. gj=k; Observation E", "powers of radical monomial ideals", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](const MonomialIdeal& j, std::size_t n) {
               out.push_back(guarded("radical-power", "Prop. gj=k", ring_label(j) + ", n=" + std::to_string(n),
                                     [&] { return check_radical_power(j, n); }));
             };
             add(maximal_ideal(RingSpec(2, cfg.p)), 3);
             add(example_ideal(3, cfg.p, "x,y"), 2);
             add(example_ideal(3, cfg.p, "x,y"), 3);
             add(example_ideal(3, cfg.p, "x*y,x*z,y*z"), 2);
             add(example_ideal(4, cfg.p, "x*z,x*w,y*z,y*w"), 2);
             add(maximal_ideal(RingSpec(3, cfg.p)), 2);
             add(example_ideal(2, cfg.p, "x^2,y"), 2);
             // Draws of height one are discarded so the family exercises the bound.
             std::size_t kept = 0;
             for (std::size_t i = 0; i < 200 && kept < 8; ++i) {
               const std::size_t d = 3 + i % 2;
               auto j = fuzz::random_radical_ideal(RingSpec(d, cfg.p), fuzz::derive_seed(cfg.seed, 2000 + i));
               if (j.is_zero() || j.is_unit() || height(j) < 2) continue;
               add(j, 2);
               ++kept;
             }
             return out;
           }});

  reg.add({"ci-power", "Cor. ci; Discussion (socle basis of S/J^2); Example J = (x,y^2,z^3)",
           "types of powers of monomial parameter ideals", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             const std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> cases = {
                 {{1, 2, 3}, 2}, {{1, 1}, 2}, {{2, 2}, 2}, {{2, 3}, 3}, {{1, 1, 1}, 3}, {{2, 1, 2}, 2}};
             for (const auto& [a, n] : cases) {
               out.push_back(guarded("ci-power", "Cor. ci", "a=" + nlohmann::json(a).dump() + ", n=" + std::to_string(n),
                                     [&] { return check_ci_power(a, n, cfg.p); }));
             }
             return out;
           }});

  reg.add({"locally-ci", "Prop. locally; Observation F", "powers of generically complete-intersection ideals",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](const MonomialIdeal& j, std::size_t n) {
               out.push_back(guarded("locally-ci", "Prop. locally", ring_label(j) + ", n=" + std::to_string(n),
                                     [&] { return check_locally_ci(j, n); }));
             };
             add(example_ideal(3, cfg.p, "x,y"), 2);
             add(example_ideal(3, cfg.p, "x,y"), 3);
             add(example_ideal(3, cfg.p, "x*y,z"), 2);
             add(example_ideal(4, cfg.p, "x*z,x*w,y*z,y*w"), 2);
             add(example_ideal(4, cfg.p, "x,y,z"), 2);
             return out;
           }});

  reg.add({"beta-d-minus-1", "Cor. bd", "Betti numbers beta_{d-1}, beta_d of S/m^t K", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](std::size_t t, const MonomialIdeal& k) {
               out.push_back(guarded("beta-d-minus-1", "Cor. bd", ring_label(k) + ", t=" + std::to_string(t),
                                     [&] { return check_beta_d_minus_1(t, k); }));
             };
             add(1, maximal_ideal(RingSpec(2, cfg.p)));
             add(1, maximal_ideal(RingSpec(3, cfg.p)));
             for (std::size_t i = 0; i < 5; ++i) {
               add(2, fuzz::random_artinian_ideal(RingSpec(2, cfg.p), fuzz::derive_seed(cfg.seed, 3000 + i), {3, 2}));
               add(1, fuzz::random_artinian_ideal(RingSpec(3, cfg.p), fuzz::derive_seed(cfg.seed, 3100 + i), {2, 2}));
             }
             return out;
           }});

  reg.add({"hilbert-burch-type", "Prop. ram; Observation D; Fact c2", "height-two products of monomial ideals",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             auto add = [&](const MonomialIdeal& j, const MonomialIdeal& k) {
               out.push_back(guarded("hilbert-burch-type", "Prop. ram", ring_label(j) + ", K=" + k.to_string(),
                                     [&] { return check_hilbert_burch_type(j, k); }));
             };
             const auto m2 = maximal_ideal(RingSpec(2, cfg.p));
             add(m2, m2);
             add(m2, example_ideal(2, cfg.p, "x,y^2"));
             add(example_ideal(3, cfg.p, "x,y"), example_ideal(3, cfg.p, "x,y,z"));
             add(example_ideal(3, cfg.p, "x,y"), example_ideal(3, cfg.p, "x^2,y"));
             add(example_ideal(2, cfg.p, "x"), m2);
             return out;
           }});

  reg.add({"minimal-multiplicity", "Prop. min; Observation G; Remark after Prop. min",
           "type bound for quotients with m^2 = 0", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (std::size_t d : {2, 3, 4}) {
               const auto m = maximal_ideal(RingSpec(d, cfg.p));
               out.push_back(guarded("minimal-multiplicity", "Prop. min", ring_label(m) + ", K=m",
                                     [&] { return check_minimal_multiplicity(m, m); }));
             }
             const auto m = maximal_ideal(RingSpec(2, cfg.p));
             out.push_back(guarded("minimal-multiplicity", "Prop. min", "J=m, K=m^2",
                                   [&] { return check_minimal_multiplicity(m, ideal_power(m, 2)); }));
             return out;
           }});

  reg.add({"prime-times-primary", "Cor. j=kr", "type(S/PK) for a monomial prime P and P-primary K",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             const std::vector<std::string> ks = {"x^2,y", "x^2,x*y,y^2", "x^2,x*y,y^3", "x^3,y^2"};
             for (const auto& k : ks) {
               const auto K = example_ideal(3, cfg.p, k);
               out.push_back(guarded("prime-times-primary", "Cor. j=kr", ring_label(K) + ", P=(x,y)",
                                     [&] { return check_prime_times_primary({0, 1}, K); }));
             }
             return out;
           }});
}

}  // namespace detail

}  // namespace artinres
