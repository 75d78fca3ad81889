#include <cmath>

#include "artinres/errors.hpp"
#include "artinres/fuzz.hpp"
#include "artinres/ideal_io.hpp"
#include "artinres/koszul.hpp"
#include "artinres/poincare.hpp"
#include "artinres/resolution.hpp"
#include "artinres/tor.hpp"
#include "internal.hpp"

namespace artinres {

using detail::json_list;
using detail::ring_label;

MonomialIdeal power_of_maximal(std::size_t d, std::size_t n, std::uint32_t p) {
  return ideal_power(maximal_ideal(RingSpec(d, p)), n);
}

std::uint64_t ring_type(const MonomialIdeal& ideal, std::string* route) {
  if (is_artinian(ideal)) {
    if (route) *route = "socle";
    return socle(ring_module(ArtinianAlgebra::build(ideal))).type;
  }
  const BettiTable t = graded_betti(ideal);
  if (!is_cohen_macaulay(ideal, t)) {
    throw HypothesisError("S/I is neither artinian nor Cohen-Macaulay: " + ideal.to_string());
  }
  if (route) *route = "koszul";
  return cm_type_via_S(ideal, t);
}

GradedModule named_module(const AlgebraPtr& alg, const std::string& name) {
  if (name == "k") return residue_field(alg);
  if (name == "R") return ring_module(alg);
  if (name == "omega") return canonical_module(alg);
  if (name.rfind("random:", 0) == 0) {
    const std::string s = name.substr(7);
    try {
      return random_finite_length_module(alg, std::stoull(s));
    } catch (const std::invalid_argument&) {
      throw InputError("bad seed in module name '" + name + "'");
    }
  }
  if (name.size() > 4 && name.rfind("R/(", 0) == 0 && name.back() == ')') {
    IdealSyntax syn;
    for (std::size_t i = 0; i < alg->num_vars(); ++i) syn.vars.push_back("x" + std::to_string(i + 1));
    syn.char_p = alg->ring().char_p;
    syn.force_char = true;
    return cyclic_module(alg, parse_ideal_text(name.substr(3, name.size() - 4), syn));
  }
  throw InputError("unknown module name '" + name + "' (k, R, omega, R/(...), random:<seed>)");
}

namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::int64_t sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

ClaimResult check_observation_a(const MonomialIdeal& ideal, std::size_t n_max, const Limits& limits) {
  ClaimBuilder b("obs-a", "Observation A: beta_n(w) >= sum_{i<n} (-1)^{n-i+1} beta_i(w), +2 for even n",
                 ring_label(ideal) + ", n<=" + std::to_string(n_max));
  auto alg = ArtinianAlgebra::build(ideal);
  const std::size_t type = socle(ring_module(alg)).type;
  b.value("type", type);
  if (type < 2) {
    b.skip("R is Gorenstein (type 1)");
    return b.finish();
  }
  const GradedModule omega = canonical_module(alg);
  const ResolutionR res = resolve(omega, n_max, limits);
  const auto beta = res.betti();
  b.value("betti_omega", json_list(beta));
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += sign(n - i + 1) * as_int(beta[i]);
    if (n % 2 == 0) s += 2;
    b.ge("n=" + std::to_string(n) + ": beta_n >= alternating sum" + (n % 2 == 0 ? " + 2" : ""), as_int(beta[n]), s);
  }
  const TorProfile tor = tor_profile(residue_field(alg), omega, n_max, limits);
  b.eq("l(Tor_i(k, w)) == beta_i(w)", json_list(tor.lengths), json_list(beta));
  return b.finish();
}

ClaimResult check_prop_g(const MonomialIdeal& ideal, const std::string& module_name, std::size_t n_max,
                         const Limits& limits) {
  ClaimBuilder b("prop-g",
                 "Prop. g: sum_{i<=n} (-1)^i l(Tor_i(M,w)) >= 2 l(M) for even n, >= 0 for odd n",
                 ring_label(ideal) + ", M=" + module_name + ", n<=" + std::to_string(n_max));
  auto alg = ArtinianAlgebra::build(ideal);
  const std::size_t type = socle(ring_module(alg)).type;
  b.value("type", type);
  if (type < 2) {
    b.skip("R is Gorenstein (type 1)");
    return b.finish();
  }
  const GradedModule m = named_module(alg, module_name);
  if (m.is_zero()) {
    b.skip("M is zero");
    return b.finish();
  }
  const TorProfile tor = tor_profile(m, canonical_module(alg), n_max, limits);
  const std::int64_t len = as_int(m.length());
  b.value("length_M", len).value("tor_lengths", json_list(tor.lengths));
  nlohmann::ordered_json opposite = nlohmann::ordered_json::array();
  std::int64_t alt = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    alt += sign(n) * as_int(tor.lengths[n]);
    const std::int64_t bound = n % 2 == 0 ? 2 * len : 0;
    b.ge("n=" + std::to_string(n) + ": sum (-1)^i l(Tor_i)", alt, bound);
    opposite.push_back({{"n", n}, {"sum_(-1)^(n-i)", sign(n) * alt}, {"bound", bound},
                        {"holds", sign(n) * alt >= bound}});
  }
  b.value("opposite_orientation", opposite);
  return b.finish();
}

ClaimResult check_tor1_vs_tensor(const MonomialIdeal& ideal, const std::string& module_name,
                                 const Limits& limits) {
  ClaimBuilder b("cor-gd", "Cor. gd: l(M (x) w) >= l(Tor_1(M,w)) for M of finite length",
                 ring_label(ideal) + ", M=" + module_name);
  auto alg = ArtinianAlgebra::build(ideal);
  const GradedModule m = named_module(alg, module_name);
  const GradedModule omega = canonical_module(alg);
  const TorProfile tor = tor_profile(m, omega, 1, limits);
  b.value("tor_lengths", json_list(tor.lengths));
  b.eq("l(Tor_0) == l(M (x) w) computed directly", as_int(tor.lengths[0]), as_int(tensor_length(m, omega, limits)));
  b.ge("l(M (x) w) >= l(Tor_1(M, w))", as_int(tor.lengths[0]), as_int(tor.lengths[1]));
  return b.finish();
}

ClaimResult check_esyz(const MonomialIdeal& ideal, std::size_t n_max, const Limits& limits) {
  ClaimBuilder b("esyz", "Lemma esyz: l(Syz_n(w)) = l(R)(sum_{i<n} (-1)^{n-1-i} beta_i(w) + (-1)^n)",
                 ring_label(ideal) + ", n<=" + std::to_string(n_max));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const SyzygyLengthReport rep = syzygy_length_check(ideal, n, limits);
    if (n == n_max) b.value("betti_omega", json_list(rep.betti)).value("length_R", rep.ring_length);
    b.eq("n=" + std::to_string(n) + ": l(Syz_n(w))", rep.lhs, rep.rhs);
  }
  return b.finish();
}

ClaimResult check_type2(const MonomialIdeal& ideal, const Limits& limits) {
  ClaimBuilder b("type2", "Cor. t2: type(R) = 2 implies beta_2(w) >= beta_1(w)", ring_label(ideal));
  auto alg = ArtinianAlgebra::build(ideal);
  const std::size_t type = socle(ring_module(alg)).type;
  b.value("type", type);
  if (type != 2) {
    b.skip("type(R) = " + std::to_string(type) + ", not 2");
    return b.finish();
  }
  const auto beta = resolve(canonical_module(alg), 2, limits).betti();
  b.value("betti_omega", json_list(beta));
  b.ge("beta_2(w) >= beta_1(w)", as_int(beta[2]), as_int(beta[1]));
  return b.finish();
}

ClaimResult check_m2_closed_form(std::size_t e, std::size_t i_max, std::uint32_t p) {
  const MonomialIdeal ideal = power_of_maximal(e, 2, p);
  ClaimBuilder b("m2-closed-form", "Example ave: beta_0(w) = e, beta_i(w) = e^{i-1}(e^2-1) over A/m^2",
                 ring_label(ideal) + ", i<=" + std::to_string(i_max));
  auto alg = ArtinianAlgebra::build(ideal);
  b.eq("type(R) = e", as_int(socle(ring_module(alg)).type), as_int(e));
  b.eq("l(R) = e + 1", as_int(alg->length()), as_int(e + 1));
  const auto beta = betti_canonical(ideal, i_max);
  b.value("betti_omega", json_list(beta));
  nlohmann::ordered_json printed = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i <= i_max; ++i) {
    const BigInt closed = closed_form_m2_betti(e, i);
    b.eq("beta_" + std::to_string(i) + "(w) == closed form", as_int(beta[i]), static_cast<std::int64_t>(closed));
    if (i >= 1) {
      // The variant e^{i-1}(e^i - 1) agrees with the resolution only at i <= 2.
      BigInt v = 1;
      for (std::size_t k = 1; k < i; ++k) v *= e;
      BigInt ei = 1;
      for (std::size_t k = 0; k < i; ++k) ei *= e;
      v *= ei - 1;
      printed.push_back({{"i", i}, {"e^{i-1}(e^i-1)", static_cast<std::int64_t>(v)},
                         {"matches", static_cast<std::int64_t>(v) == as_int(beta[i])}});
    }
  }
  b.value("printed_variant", printed);
  return b.finish();
}

ClaimResult check_t345_reduction(std::size_t i_max, std::uint32_t p) {
  const MonomialIdeal ideal = power_of_maximal(2, 2, p);
  ClaimBuilder b("t345-reduction", "Example after Cor. t2: beta_i(w) = 2^{i-1} 3 for k[[t^3,t^4,t^5]]",
                 ring_label(ideal) + " (reduction k[X,Y]/m^2), i<=" + std::to_string(i_max));
  auto alg = ArtinianAlgebra::build(ideal);
  b.eq("type(R) = 2", as_int(socle(ring_module(alg)).type), 2);
  const auto beta = betti_canonical(ideal, i_max);
  b.value("betti_omega", json_list(beta));
  for (std::size_t i = 1; i <= i_max; ++i) {
    b.eq("beta_" + std::to_string(i) + "(w) == 2^{i-1} 3", as_int(beta[i]), std::int64_t{3} << (i - 1));
  }
  return b.finish();
}

ClaimResult check_prop_d1(std::size_t d, std::size_t n, std::uint32_t p) {
  const MonomialIdeal ideal = power_of_maximal(d, n, p);
  ClaimBuilder b("prop-d1", "Prop. d-1: beta_1(w) - beta_0(w) = rank_S Syz_{d-1}(R) >= d-1 over R_{d,n}",
                 "R_{" + std::to_string(d) + "," + std::to_string(n) + "}, p=" + std::to_string(p));
  if (d < 2 || n < 2) {
    b.skip("needs d, n >= 2");
    return b.finish();
  }
  const auto beta = betti_canonical(ideal, 1);
  const BettiTable t = graded_betti(ideal);
  const std::int64_t rank = syzygy_rank(t, d - 1);
  const std::int64_t diff = as_int(beta[1]) - as_int(beta[0]);
  b.value("betti_omega", json_list(beta)).value("betti_S", json_list(t.totals()));
  b.eq("beta_1(w) - beta_0(w) [over R] == rank_S Syz_{d-1} [over S]", diff, rank);
  b.ge("rank_S Syz_{d-1} >= d-1", rank, as_int(d - 1));
  return b.finish();
}

ClaimResult check_d1_corollaries(std::size_t d, std::size_t n, std::uint32_t p) {
  const MonomialIdeal ideal = power_of_maximal(d, n, p);
  ClaimBuilder b("d1-corollaries",
                 "Corollaries of Prop. d-1: beta_0(w) = C(d+n-2,d-1); beta_1(w) >= 2d-1; beta_1(w) >= 2d+1 if n > 2",
                 "R_{" + std::to_string(d) + "," + std::to_string(n) + "}, p=" + std::to_string(p));
  if (d < 2 || n < 2) {
    b.skip("needs d, n >= 2");
    return b.finish();
  }
  const auto beta = betti_canonical(ideal, 1);
  b.value("betti_omega", json_list(beta));
  const std::int64_t c0 = as_int(binomial_betti_power_ideal(d, n));
  b.eq("beta_0(w) == C(d+n-2, d-1)", as_int(beta[0]), c0);
  b.ge("beta_1(w) >= (d-1) + C(d+n-2, n-1)", as_int(beta[1]), as_int(d - 1) + as_int(binomial(d + n - 2, n - 1)));
  b.ge("beta_1(w) >= 2d-1", as_int(beta[1]), as_int(2 * d - 1));
  if (n > 2) {
    b.ge("n > 2: beta_0(w) >= d+2", as_int(beta[0]), as_int(d + 2));
    b.ge("n > 2: beta_1(w) >= 2d+1", as_int(beta[1]), as_int(2 * d + 1));
  }
  return b.finish();
}

ClaimResult check_transpose(const MonomialIdeal& ideal, const Limits& limits) {
  ClaimBuilder b("transpose", "Prop. d-1 proof: beta_0(w) = n_d and beta_1(w) = n_{d-1}", ring_label(ideal));
  const TransposeReport rep = transpose_consistency(ideal, limits);
  if (!rep.applicable) {
    b.skip(rep.reason);
    return b.finish();
  }
  b.eq("beta_0(w) == beta_d(S/I)", as_int(rep.beta0_omega), as_int(rep.n_d));
  b.eq("beta_1(w) == beta_{d-1}(S/I)", as_int(rep.beta1_omega), as_int(rep.n_d_minus_1));
  return b.finish();
}

ClaimResult check_ph3(const MonomialIdeal& ideal, const Limits& limits) {
  ClaimBuilder b("ph3", "Prop. ph3: CM, q-linear, non-principal I gives beta_1(w)-beta_0(w) = rank Syz_{h-1} >= h-1 > 0",
                 ring_label(ideal));
  if (ideal.num_generators() < 2) {
    b.skip("I is principal");
    return b.finish();
  }
  const BettiTable t = graded_betti(ideal);
  if (!is_cohen_macaulay(ideal, t)) {
    b.skip("S/I is not Cohen-Macaulay");
    return b.finish();
  }
  const LinearityReport lin = has_linear_resolution(ideal, t);
  if (!lin.linear || lin.q < 2) {
    b.skip("I has no q-linear resolution with q > 1");
    return b.finish();
  }
  const std::size_t h = height(ideal);
  b.value("height", h).value("q", lin.q).value("betti_S", json_list(t.totals()));
  if (!b.gt("height > 1", as_int(h), 1)) return b.finish();
  const std::int64_t rank = syzygy_rank(t, h - 1);
  const std::int64_t diff = as_int(t.total(h - 1)) - as_int(t.total(h));
  b.eq("beta_{h-1}(S/I) - beta_h(S/I) == rank_S Syz_{h-1}", diff, rank);
  b.ge("rank_S Syz_{h-1} >= h-1", rank, as_int(h - 1));
  if (is_artinian(ideal)) {
    const auto beta = betti_canonical(ideal, 1, limits);
    b.value("betti_omega", json_list(beta));
    b.eq("beta_1(w) - beta_0(w) == rank_S Syz_{h-1}", as_int(beta[1]) - as_int(beta[0]), rank);
    b.ge("type(R) >= 2", as_int(beta[0]), 2);
  } else {
    b.note("R is not artinian; the omega side is checked only through the S-side numbers");
  }
  return b.finish();
}

ClaimResult check_dutta_griffith(const MonomialIdeal& ideal, const std::string& module_name, const Limits& limits) {
  ClaimBuilder b("dutta-griffith",
                 "Corollaries after Cor. gd and Prop. ph3: l(M (x) w) - l(Tor_1(M,w)) >= l(M)(Ht(I)-1)",
                 ring_label(ideal) + ", M=" + module_name, ClaimKind::recorded);
  auto alg = ArtinianAlgebra::build(ideal);
  const GradedModule m = named_module(alg, module_name);
  if (m.is_zero()) {
    b.skip("M is zero");
    return b.finish();
  }
  const TorProfile tor = tor_profile(m, canonical_module(alg), 1, limits);
  const std::int64_t lhs = as_int(tor.lengths[0]) - as_int(tor.lengths[1]);
  const std::int64_t rhs = as_int(m.length()) * (as_int(height(ideal)) - 1);
  b.value("l(M(x)w)", tor.lengths[0]).value("l(Tor_1)", tor.lengths[1]).value("length_M", m.length());
  b.value("opposite_orientation",
          {{"l(Tor_1) - l(M(x)w)", -lhs}, {"bound", rhs}, {"holds", -lhs >= rhs}});
  b.ge("l(M(x)w) - l(Tor_1(M,w)) >= l(M)(Ht(I)-1)", lhs, rhs);
  return b.finish();
}

ClaimResult check_semidualizing_screen(const MonomialIdeal& ideal, const std::string& expected, const Limits& limits) {
  ClaimBuilder b("semidualizing-screen",
                 "Cor. none (*) and the beta_1 < 8 corollary: beta_1(w) < 8 or beta_1(w) < 2 beta_0(w) rules out "
                 "nontrivial semidualizing modules",
                 ring_label(ideal) + (expected.empty() ? "" : ", expected=" + expected));
  const auto beta = betti_canonical(ideal, 1, limits);
  std::string verdict = "inconclusive", rule;
  if (beta[1] < 8) {
    verdict = "none";
    rule = "beta_1(w) < 8";
  } else if (beta[1] < 2 * beta[0]) {
    verdict = "none";
    rule = "beta_1(w) < 2 beta_0(w)";
  }
  b.value("betti_omega", json_list(beta)).value("screen", verdict);
  if (!rule.empty()) b.value("rule", rule);
  if (!expected.empty()) b.eq("screen verdict", nlohmann::ordered_json(verdict), nlohmann::ordered_json(expected));
  return b.finish();
}

namespace detail {

namespace {

MonomialIdeal text_ideal(std::size_t d, std::uint32_t p, const std::string& gens) {
  IdealSyntax syn;
  static const char* names4[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < d; ++i) syn.vars.push_back(d <= 4 ? names4[i] : "x" + std::to_string(i + 1));
  syn.char_p = p;
  syn.force_char = true;
  return parse_ideal_text(gens, syn);
}

std::vector<MonomialIdeal> builtin_rings(const RunConfig& cfg) {
  if (cfg.ring) return {power_of_maximal(cfg.ring->d, cfg.ring->n, cfg.p)};
  return {power_of_maximal(2, 2, cfg.p),
          power_of_maximal(2, 3, cfg.p),
          power_of_maximal(3, 2, cfg.p),
          text_ideal(4, cfg.p, "x^2,y^2,z^2,w^2,x*y"),
          text_ideal(4, cfg.p, "x^2,y^2,z^2,w^2,x*y*z"),
          text_ideal(2, cfg.p, "x^2,x*y,y^3"),
          text_ideal(3, cfg.p, "x^2,y^2,z^2,x*y*z"),
          text_ideal(2, cfg.p, "x^2,y^3")};
}

std::vector<std::pair<std::size_t, std::size_t>> grid(const RunConfig& cfg) {
  if (cfg.ring) return {{cfg.ring->d, cfg.ring->n}};
  return {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
}

template <class F>
ClaimResult run_case(const std::string& id, const std::string& cite, const std::string& inputs, F&& f,
                     ClaimKind kind = ClaimKind::asserted) {
  return guarded(id, cite, inputs, std::function<ClaimResult()>(std::forward<F>(f)), kind);
}

}  // namespace

MonomialIdeal example_ideal(std::size_t d, std::uint32_t p, const std::string& gens) { return text_ideal(d, p, gens); }

void register_canonical_claims(ClaimRegistry& reg) {
  reg.add({"obs-a", "Observation A", "alternating Betti sums of w bound the next Betti number", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (const auto& I : builtin_rings(cfg)) {
               out.push_back(run_case("obs-a", "Observation A", ring_label(I),
                                      [&] { return check_observation_a(I, 4, cfg.limits); }));
             }
             if (!cfg.ring) {
               const auto I = fuzz::random_non_gorenstein_ideal(RingSpec(2, cfg.p), 7, {4, 3});
               ClaimResult r = run_case("obs-a", "Observation A", ring_label(I),
                                        [&] { return check_observation_a(I, 4, cfg.limits); });
               r.inputs += ", random seed 7";
               out.push_back(std::move(r));
             }
             return out;
           }});

  reg.add({"prop-g", "Prop. g", "alternating Tor lengths against w (literal orientation)", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (const auto& I : builtin_rings(cfg)) {
               for (const char* m : {"k", "R", "omega", "R/(x1)"}) {
                 out.push_back(run_case("prop-g", "Prop. g", ring_label(I) + ", M=" + m,
                                        [&] { return check_prop_g(I, m, 4, cfg.limits); }));
               }
             }
             return out;
           }});

  reg.add({"cor-gd", "Cor. gd", "l(M (x) w) >= l(Tor_1(M, w))", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (const auto& I : builtin_rings(cfg)) {
               for (const char* m : {"k", "R", "omega", "R/(x1)"}) {
                 out.push_back(run_case("cor-gd", "Cor. gd", ring_label(I) + ", M=" + m,
                                        [&] { return check_tor1_vs_tensor(I, m, cfg.limits); }));
               }
             }
             return out;
           }});

  reg.add({"esyz", "Lemma esyz", "length of Syz_n(w) from the Betti numbers of w", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (const auto& I : builtin_rings(cfg)) {
               out.push_back(
                   run_case("esyz", "Lemma esyz", ring_label(I), [&] { return check_esyz(I, 4, cfg.limits); }));
             }
             return out;
           }});

  reg.add({"type2", "Cor. t2 (and the Remark after Example ave)", "type 2 rings: beta_2(w) >= beta_1(w)",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (const auto& I : builtin_rings(cfg)) {
               out.push_back(run_case("type2", "Cor. t2", ring_label(I), [&] { return check_type2(I, cfg.limits); }));
             }
             return out;
           }});

  reg.add({"m2-closed-form", "Example ave", "Betti numbers of w over A/m^2 in closed form", ClaimKind::asserted,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (std::size_t e : {2, 3}) {
               out.push_back(run_case("m2-closed-form", "Example ave", "e=" + std::to_string(e),
                                      [&] { return check_m2_closed_form(e, 4, cfg.p); }));
             }
             return out;
           }});

  reg.add({"t345-reduction", "Example (k[[t^3,t^4,t^5]])", "Betti numbers of w via the artinian reduction",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             return std::vector<ClaimResult>{run_case("t345-reduction", "Example (k[[t^3,t^4,t^5]])", "i<=5",
                                                      [&] { return check_t345_reduction(5, cfg.p); })};
           }});

  reg.add({"prop-d1", "Prop. d-1 / Observation C", "R-side beta_1(w)-beta_0(w) equals the S-side syzygy rank",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : grid(cfg)) {
               out.push_back(run_case("prop-d1", "Prop. d-1", "d=" + std::to_string(d) + ",n=" + std::to_string(n),
                                      [&] { return check_prop_d1(d, n, cfg.p); }));
             }
             return out;
           }});

  reg.add({"d1-corollaries", "Corollaries following Prop. d-1", "beta_0(w) and lower bounds on beta_1(w) over R_{d,n}",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : grid(cfg)) {
               out.push_back(run_case("d1-corollaries", "Corollaries following Prop. d-1",
                                      "d=" + std::to_string(d) + ",n=" + std::to_string(n),
                                      [&] { return check_d1_corollaries(d, n, cfg.p); }));
             }
             return out;
           }});

  reg.add({"transpose", "Prop. d-1 proof; Example 3e", "presentation of w from the tail of the S-resolution",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             for (auto [d, n] : grid(cfg)) {
               const auto I = power_of_maximal(d, n, cfg.p);
               out.push_back(run_case("transpose", "Prop. d-1 proof", ring_label(I),
                                      [&] { return check_transpose(I, cfg.limits); }));
             }
             return out;
           }});

  reg.add({"ph3", "Prop. ph3; Example 3e", "CM q-linear ideals: beta_1(w) - beta_0(w) >= Ht(I) - 1",
           ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             const std::vector<MonomialIdeal> cases = {
                 text_ideal(2, cfg.p, "x^2,x*y,y^2"), text_ideal(3, cfg.p, "x^2,y^2,z^2,x*y,x*z,y*z"),
                 text_ideal(3, cfg.p, "x^2,x*y,y^2"), text_ideal(3, cfg.p, "x*y,x*z,y*z"),
                 text_ideal(2, cfg.p, "x^2,y^3")};
             for (const auto& I : cases) {
               out.push_back(run_case("ph3", "Prop. ph3", ring_label(I), [&] { return check_ph3(I, cfg.limits); }));
             }
             return out;
           }});

  reg.add({"dutta-griffith", "Corollary after Cor. gd; Corollary after Prop. ph3; 2-dimensional corollary",
           "l(M (x) w) - l(Tor_1(M, w)) against l(M)(Ht - 1), both orientations recorded", ClaimKind::recorded,
           [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             std::vector<std::pair<MonomialIdeal, std::string>> cases = {
                 {power_of_maximal(2, 2, cfg.p), "k"},
                 {power_of_maximal(2, 2, cfg.p), "R"},
                 {power_of_maximal(2, 2, cfg.p), "omega"},
                 {power_of_maximal(2, 3, cfg.p), "random:11"},
                 {power_of_maximal(3, 2, cfg.p), "k"},
                 {text_ideal(2, cfg.p, "x^2,y^3"), "k"}};
             if (cfg.ring) cases = {{power_of_maximal(cfg.ring->d, cfg.ring->n, cfg.p), "k"}};
             for (const auto& [I, m] : cases) {
               out.push_back(run_case("dutta-griffith", "Corollary after Cor. gd", ring_label(I) + ", M=" + m,
                                      [&] { return check_dutta_griffith(I, m, cfg.limits); }, ClaimKind::recorded));
             }
             return out;
           }});

  reg.add({"semidualizing-screen", "Cor. none (*); beta_1 < 8 corollary and its two examples",
           "screen for nontrivial semidualizing modules", ClaimKind::asserted, [](const RunConfig& cfg) {
             std::vector<ClaimResult> out;
             std::vector<std::pair<MonomialIdeal, std::string>> cases = {
                 {text_ideal(4, cfg.p, "x^2,y^2,z^2,w^2,x*y"), "none"},
                 {text_ideal(4, cfg.p, "x^2,y^2,z^2,w^2,x*y*z"), "none"},
                 {power_of_maximal(2, 2, cfg.p), ""},
                 {power_of_maximal(3, 3, cfg.p), ""}};
             if (cfg.ring) cases = {{power_of_maximal(cfg.ring->d, cfg.ring->n, cfg.p), ""}};
             for (const auto& [I, expected] : cases) {
               out.push_back(run_case("semidualizing-screen", "Cor. none", ring_label(I),
                                      [&] { return check_semidualizing_screen(I, expected, cfg.limits); }));
             }
             return out;
           }});
}

}  // namespace detail

}  // namespace artinres
