#include "artinres/errors.hpp"
#include "artinres/fuzz.hpp"
#include "artinres/poincare.hpp"
#include "artinres/resolution.hpp"
#include "artinres/tor.hpp"
#include "internal.hpp"

namespace artinres {

using detail::json_list;
using detail::ring_label;

namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::string rdn(std::size_t d, std::size_t n, std::uint32_t p) {
  return "R_{" + std::to_string(d) + "," + std::to_string(n) + "}, p=" + std::to_string(p);
}

}  // namespace

ClaimResult check_gap_bounds(std::size_t d, std::size_t n, const std::string& module_name, std::size_t i_max,
                             std::uint32_t p, const Limits& limits) {
  ClaimBuilder b("gap-bounds",
                 "Observation 2; Prop. ob: beta_{i+1}(M)-beta_i(M) >= d-1; Prop. sh: >= C(d+n-1,d-1)-1 for i >= 2",
                 rdn(d, n, p) + ", M=" + module_name + ", i<=" + std::to_string(i_max));
  if (d < 2 || n < 2) {
    b.skip("needs d, n >= 2");
    return b.finish();
  }
  auto alg = ArtinianAlgebra::build(power_of_maximal(d, n, p));
  const GradedModule m = named_module(alg, module_name);
  const auto beta = resolve(m, i_max, limits).betti();
  b.value("betti", json_list(beta));
  if (m.is_zero() || beta[1] == 0) {
    b.skip("M is free");
    return b.finish();
  }
  const std::size_t first = (d == 2 || n == 2) ? 1 : 2;
  const std::int64_t sh = as_int(power_ideal_generator_count(d, n)) - 1;
  for (std::size_t i = first; i < i_max; ++i) {
    const std::int64_t gap = as_int(beta[i + 1]) - as_int(beta[i]);
    b.ge("i=" + std::to_string(i) + ": beta_{i+1} - beta_i >= d-1", gap, as_int(d - 1));
    if (i >= 2) b.ge("i=" + std::to_string(i) + ": beta_{i+1} - beta_i >= C(d+n-1,d-1)-1", gap, sh);
  }
  return b.finish();
}

ClaimResult check_example_e1(std::size_t d, std::size_t n, std::uint32_t p) {
  ClaimBuilder b("example-e1",
                 "Example e1 and Example sh1e(ii): beta_2(R/fR) - beta_1(R/fR) = d-1 for f = x_1^{n-1}",
                 rdn(d, n, p));
  auto alg = ArtinianAlgebra::build(power_of_maximal(d, n, p));
  const std::string f = n == 2 ? "x1" : "x1^" + std::to_string(n - 1);
  const auto beta = resolve(named_module(alg, "R/(" + f + ")"), 2).betti();
  b.value("f", f).value("betti", json_list(beta));
  b.eq("beta_2 - beta_1 == d-1", as_int(beta[2]) - as_int(beta[1]), as_int(d - 1));
  b.gt("C(d+n-1,d-1)-1 > beta_2 - beta_1 (the binomial bound fails at i = 1)",
       as_int(power_ideal_generator_count(d, n)) - 1, as_int(beta[2]) - as_int(beta[1]));
  const auto beta_x = resolve(named_module(alg, "R/(x1)"), 1).betti();
  b.value("betti_R/(x1)", json_list(beta_x));
  b.eq("beta_1(R/x1R) == beta_0(R/x1R) == 1", json_list(beta_x), json_list({1, 1}));
  return b.finish();
}

ClaimResult check_example_sh1e(std::uint32_t p) {
  ClaimBuilder b("example-sh1e", "Example sh1e(i): M = R/(x1 x2) over k[X1,X2]/m^2 has beta = (1,1,2,4)", rdn(2, 2, p));
  auto alg = ArtinianAlgebra::build(power_of_maximal(2, 2, p));
  const GradedModule m = named_module(alg, "R/(x1*x2)");
  const auto beta = resolve(m, 3).betti();
  b.value("betti", json_list(beta)).value("length_M", m.length());
  b.eq("beta(R/(x1 x2)) through beta_3", json_list(beta), json_list({1, 1, 2, 4}));
  b.eq("beta_3 - beta_2 == C(3,1) - 1", as_int(beta[3]) - as_int(beta[2]), 2);
  // Readings that do give a nonfree cyclic module, kept for comparison.
  b.value("x1*x2 lies in m^2", true);
  b.value("betti_R/(x1) over R_{2,2}", json_list(resolve(named_module(alg, "R/(x1)"), 3).betti()));
  auto alg3 = ArtinianAlgebra::build(power_of_maximal(2, 3, p));
  b.value("betti_R/(x1*x2) over R_{2,3}", json_list(resolve(named_module(alg3, "R/(x1*x2)"), 3).betti()));
  return b.finish();
}

ClaimResult check_dual_gap(std::size_t d, std::size_t n, const std::string& module_name, std::size_t i_max,
                           std::uint32_t p, const Limits& limits) {
  ClaimBuilder b("dual-gap",
                 "Corollary on M* = Hom(M,R): beta_{i+1}(M*) - beta_i(M*) >= d-1 for i >= 0; beta_1(M*) - beta_0(M) >= d",
                 rdn(d, n, p) + ", M=" + module_name + ", i<=" + std::to_string(i_max));
  auto alg = ArtinianAlgebra::build(power_of_maximal(d, n, p));
  const GradedModule m = named_module(alg, module_name);
  const auto beta_m = resolve(m, 1, limits).betti();
  if (m.is_zero() || beta_m[1] == 0) {
    b.skip("M is free");
    return b.finish();
  }
  const GradedModule dual = dual_module(m, limits);
  const auto beta = resolve(dual, i_max, limits).betti();
  b.value("betti_M", json_list(beta_m)).value("betti_dual", json_list(beta)).value("length_dual", dual.length());
  for (std::size_t i = 0; i < i_max; ++i) {
    b.ge("i=" + std::to_string(i) + ": beta_{i+1}(M*) - beta_i(M*) >= d-1", as_int(beta[i + 1]) - as_int(beta[i]),
         as_int(d - 1));
  }
  b.gt("beta_0(M*) > beta_0(M)", as_int(beta[0]), as_int(beta_m[0]));
  b.ge("beta_1(M*) - beta_0(M) >= d", as_int(beta[1]) - as_int(beta_m[0]), as_int(d));
  return b.finish();
}

ClaimResult check_mor1(const MonomialIdeal& relations, std::size_t n, const std::string& module_name,
                       std::size_t i_max, const Limits& limits) {
  const RingSpec& ring = relations.ring();
  const std::size_t e = ring.num_vars;
  ClaimBuilder b("mor1", "Cor. mor1: over A/m^n with 1 < n <= Ord(A), gaps >= C(e+n-1,e-1)-1 > dim A - 1",
                 "A=" + ring_label(relations) + ", n=" + std::to_string(n) + ", M=" + module_name);
  // Ord(A): the largest i with (f) inside m^i, i.e. the least generator degree.
  const std::size_t ord = relations.is_zero() ? static_cast<std::size_t>(-1) : relations.min_degree();
  b.value("Ord(A)", relations.is_zero() ? nlohmann::ordered_json("infinite") : nlohmann::ordered_json(ord));
  if (e < 2 || ord < 2 || n < 2 || n > ord) {
    b.skip("needs e > 1, Ord(A) > 1 and 1 < n <= Ord(A)");
    return b.finish();
  }
  const MonomialIdeal mn = ideal_power(maximal_ideal(ring), n);
  const MonomialIdeal reduced = relations.is_zero() ? mn : ideal_sum(relations, mn);
  b.truth("I + m^n == m^n", reduced == mn);
  const std::size_t dim_a = relations.is_zero() ? e : e - height(relations);
  b.value("dim A", dim_a);
  auto alg = ArtinianAlgebra::build(reduced);
  const std::int64_t bound = as_int(power_ideal_generator_count(e, n)) - 1;
  b.gt("C(e+n-1,e-1)-1 > dim A - 1", bound, as_int(dim_a) - 1);
  const GradedModule m = named_module(alg, module_name);
  const auto beta = resolve(m, i_max, limits).betti();
  b.value("betti", json_list(beta));
  if (beta[1] == 0) {
    b.skip("M is free");
    return b.finish();
  }
  for (std::size_t i = 2; i < i_max; ++i) {
    b.ge("i=" + std::to_string(i) + ": beta_{i+1}(M) - beta_i(M) >= C(e+n-1,e-1)-1",
         as_int(beta[i + 1]) - as_int(beta[i]), bound);
  }
  const auto bw = resolve(canonical_module(alg), i_max, limits).betti();
  b.value("betti_omega", json_list(bw));
  for (std::size_t i = 0; i < i_max; ++i) {
    if (i == 1) continue;
    b.ge("i=" + std::to_string(i) + ": beta_{i+1}(w) - beta_i(w) >= e-1", as_int(bw[i + 1]) - as_int(bw[i]),
         as_int(e - 1));
  }
  b.ge("e-1 >= dim A - 1", as_int(e) - 1, as_int(dim_a) - 1);
  return b.finish();
}

ClaimResult check_xy_primary(const MonomialIdeal& ideal, std::size_t n, const std::string& module_name,
                             std::size_t i_max, const Limits& limits) {
  ClaimBuilder b("xy-primary-obs",
                 "Final observation on (X,Y)-primary powers: (X,Y)-primary I, R = k[X,Y]/I^n, gaps >= d-1 for i >= 2",
                 ring_label(ideal) + ", n=" + std::to_string(n) + ", M=" + module_name, ClaimKind::conjecture);
  if (ideal.ring().num_vars != 2 || !is_artinian(ideal) || n < 2) {
    b.skip("needs an (X,Y)-primary ideal of k[X,Y] and n > 1");
    return b.finish();
  }
  auto alg = ArtinianAlgebra::build(ideal_power(ideal, n));
  const auto beta = resolve(named_module(alg, module_name), i_max, limits).betti();
  b.value("betti", json_list(beta));
  if (beta[1] == 0) {
    b.skip("M is free");
    return b.finish();
  }
  for (std::size_t i = 2; i < i_max; ++i) {
    b.ge("i=" + std::to_string(i) + ": beta_{i+1} - beta_i >= 1", as_int(beta[i + 1]) - as_int(beta[i]), 1);
  }
  return b.finish();
}

namespace detail {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> gap_grid(const RunConfig& cfg) {
  if (cfg.ring) return {{cfg.ring->d, cfg.ring->n}};
  return {{2, 2}, {2, 3}, {3, 2}};
}

ClaimResult golod_case(std::size_t d, std::size_t n, const std::string& module_name, std::size_t order,
                       const RunConfig& cfg) {
  ClaimBuilder b("golod-formula", "Prop. ob proof (*): P^N_R = P^N_S / (1 - t(P^R_S - 1)) for N killed by m^{n-1}",
                 rdn(d, n, cfg.p) + ", N=" + module_name + ", through t^" + std::to_string(order));
  auto alg = ArtinianAlgebra::build(power_of_maximal(d, n, cfg.p));
  const GradedModule m = named_module(alg, module_name);
  b.value("annihilated_by_m^{n-1}", annihilated_by_power(m, n - 1));
  const auto series = poincare_over_R(m, order, cfg.limits).to_int64(order);
  const auto beta = resolve(m, order, cfg.limits).betti();
  nlohmann::ordered_json s = nlohmann::ordered_json::array();
  for (auto c : series) s.push_back(c);
  b.value("series", s).value("betti", json_list(beta));
  b.eq("series coefficients == resolved Betti numbers", s, json_list(beta));
  return b.finish();
}

}  // namespace

void register_gap_claims(ClaimRegistry& reg) {
  reg.add({"gap-bounds", "Observation 2; Prop. ob; Prop. sh; Observation B",
           "consecutive Betti gaps of nonfree modules over R_{d,n}", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : gap_grid(cfg)) {
               const std::size_t i_max = d == 2 ? 5 : 4;
               for (const char* m : {"k", "omega", "R/(x1)", "random:42", "random:11", "random:7"}) {
                 out.push_back(guarded("gap-bounds", "Prop. ob; Prop. sh", rdn(d, n, cfg.p) + ", M=" + m,
                                       [&] { return check_gap_bounds(d, n, m, i_max, cfg.p, cfg.limits); }));
               }
             }
             return out;
           }});

  reg.add({"example-e1", "Example e1; Example sh1e(ii); Example beta_1(R/x_1R) = beta_0(R/x_1R)",
           "the cyclic module R/(x_1^{n-1}) achieves the gap d-1 at i = 1", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             std::vector<std::pair<std::size_t, std::size_t>> cases = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
             if (cfg.ring) cases = {{cfg.ring->d, cfg.ring->n}};
             for (auto [d, n] : cases) {
               out.push_back(guarded("example-e1", "Example e1", rdn(d, n, cfg.p),
                                     [&] { return check_example_e1(d, n, cfg.p); }));
             }
             return out;
           }});

  reg.add({"example-sh1e", "Example sh1e(i)", "the module R/(x1 x2) over k[X1,X2]/m^2", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             return std::vector<ClaimResult>{
                 guarded("example-sh1e", "Example sh1e(i)", rdn(2, 2, cfg.p), [&] { return check_example_sh1e(cfg.p); })};
           }});

  reg.add({"dual-gap", "Corollary on M* after Example e1", "Betti gaps of Hom_R(M, R)", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : gap_grid(cfg)) {
               const std::size_t i_max = d == 2 ? 4 : 3;
               for (const char* m : {"k", "omega", "R/(x1)"}) {
                 out.push_back(guarded("dual-gap", "Corollary on M*", rdn(d, n, cfg.p) + ", M=" + m,
                                       [&] { return check_dual_gap(d, n, m, i_max, cfg.p, cfg.limits); }));
               }
             }
             return out;
           }});

  reg.add({"mor1", "Cor. mor1", "standard graded A with Ord(A) >= n reduces to R_{e,n}", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             const std::vector<std::pair<MonomialIdeal, std::size_t>> cases = {
                 {example_ideal(2, cfg.p, "x^3"), 2}, {example_ideal(2, cfg.p, "x^3"), 3},
                 {example_ideal(3, cfg.p, "x*y,z^2"), 2}, {example_ideal(2, cfg.p, "x^2*y^2"), 3}};
             for (const auto& [A, n] : cases) {
               for (const char* m : {"k", "omega"}) {
                 out.push_back(guarded("mor1", "Cor. mor1", ring_label(A) + ", n=" + std::to_string(n) + ", M=" + m,
                                       [&] { return check_mor1(A, n, m, 4, cfg.limits); }));
               }
             }
             return out;
           }});

  reg.add({"golod-formula", "Prop. ob proof, formula (*)", "Golod-type Poincare series against direct resolutions",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : gap_grid(cfg)) {
               const std::size_t order = d == 2 ? 6 : 5;
               for (const char* m : {"k", "omega", "R/(x1)"}) {
                 out.push_back(guarded("golod-formula", "Prop. ob proof", rdn(d, n, cfg.p) + ", N=" + m,
                                       [&] { return golod_case(d, n, m, order, cfg); }));
               }
             }
             return out;
           }});

  reg.add({"xy-primary-obs", "Final observation on (X,Y)-primary powers (stated without proof)",
           "(X,Y)-primary I^n: Betti gaps >= 1 for i >= 2", ClaimKind::conjecture, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             std::vector<MonomialIdeal> cases = {example_ideal(2, cfg.p, "x,y^2"), example_ideal(2, cfg.p, "x^2,y^3"),
                                                 example_ideal(2, cfg.p, "x^2,x*y,y^2")};
             for (std::size_t i = 0; i < 6; ++i) {
               cases.push_back(fuzz::random_artinian_ideal(RingSpec(2, cfg.p), fuzz::derive_seed(cfg.seed, 100 + i),
                                                           {3, 2}));
             }
             for (const auto& I : cases) {
               for (const char* m : {"k", "omega"}) {
                 out.push_back(guarded("xy-primary-obs", "final observation", ring_label(I) + ", n=2, M=" + m,
                                       [&] { return check_xy_primary(I, 2, m, 5, cfg.limits); }, ClaimKind::conjecture));
               }
             }
             return out;
           }});
}

}  // namespace detail

}  // namespace artinres
