#pragma once

// Individual machine checks. Each returns one ClaimResult whose inputs string, together
// with the characteristic carried by the ideal's ring, reproduces it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artinres/module.hpp"
#include "artinres/monomial.hpp"
#include "artinres/verifier.hpp"

namespace artinres {

/// k[x_1..x_d]/(x)^n.
MonomialIdeal power_of_maximal(std::size_t d, std::size_t n, std::uint32_t p = kDefaultPrime);

/// Cohen-Macaulay type of S/I: socle dimension when artinian, last Betti number over S
/// when Cohen-Macaulay. Throws HypothesisError otherwise. route receives "socle" or "koszul".
std::uint64_t ring_type(const MonomialIdeal& ideal, std::string* route = nullptr);

/// Named test modules over one algebra: "k", "R", "omega", "R/(x1)", "random:<seed>".
GradedModule named_module(const AlgebraPtr& alg, const std::string& name);

// --- canonical module over artinian R ---------------------------------------------

/// beta_n(omega) >= sum_{i<n} (-1)^{n-i+1} beta_i(omega) (+2 for even n), 1 <= n <= n_max,
/// plus Tor_i^R(k, omega) = beta_i(omega) through n_max. Skipped for Gorenstein R.
ClaimResult check_observation_a(const MonomialIdeal& ideal, std::size_t n_max, const Limits& limits = {});

/// Alternating Tor sums against omega for the module `module_name`, in the literal
/// orientation; the opposite orientation is recorded alongside.
ClaimResult check_prop_g(const MonomialIdeal& ideal, const std::string& module_name, std::size_t n_max,
                         const Limits& limits = {});

/// l(M (x) omega) >= l(Tor_1(M, omega)).
ClaimResult check_tor1_vs_tensor(const MonomialIdeal& ideal, const std::string& module_name,
                                 const Limits& limits = {});

/// l(Syz_n(omega)) = l(R)(sum_{i<n} (-1)^{n-1-i} beta_i + (-1)^n) for 1 <= n <= n_max.
ClaimResult check_esyz(const MonomialIdeal& ideal, std::size_t n_max, const Limits& limits = {});

/// type(R) = 2 implies beta_2(omega) >= beta_1(omega).
ClaimResult check_type2(const MonomialIdeal& ideal, const Limits& limits = {});

/// beta_i(omega) over k[x_1..x_e]/m^2 against e^{i-1}(e^2-1); the printed variant
/// e^{i-1}(e^i-1) is recorded next to it.
ClaimResult check_m2_closed_form(std::size_t e, std::size_t i_max, std::uint32_t p = kDefaultPrime);

/// beta_i(omega) = 2^{i-1} * 3 over k[X,Y]/m^2, the artinian reduction of k[[t^3,t^4,t^5]].
ClaimResult check_t345_reduction(std::size_t i_max, std::uint32_t p = kDefaultPrime);

/// beta_1(omega) - beta_0(omega) over R_{d,n} against rank_S Syz_{d-1}(S/m^n), and >= d-1.
ClaimResult check_prop_d1(std::size_t d, std::size_t n, std::uint32_t p = kDefaultPrime);

/// beta_0(omega) = C(d+n-2, d-1); beta_1(omega) >= (d-1) + C(d+n-2, n-1) >= 2d-1; and
/// beta_1(omega) >= 2d+1 when n > 2.
ClaimResult check_d1_corollaries(std::size_t d, std::size_t n, std::uint32_t p = kDefaultPrime);

/// (beta_0, beta_1)(omega) = (beta_d, beta_{d-1})(S/I) for artinian I with a linear
/// resolution or I = m^n.
ClaimResult check_transpose(const MonomialIdeal& ideal, const Limits& limits = {});

/// For CM, non-principal, q-linear I (q > 1) with h = height: beta_{h-1} - beta_h =
/// rank_S Syz_{h-1} >= h-1 > 0, and for artinian I also beta_1(omega) - beta_0(omega).
ClaimResult check_ph3(const MonomialIdeal& ideal, const Limits& limits = {});

/// l(M (x) omega) - l(Tor_1(M, omega)) against l(M)(d - 1), both orientations, recorded only.
ClaimResult check_dutta_griffith(const MonomialIdeal& ideal, const std::string& module_name,
                                 const Limits& limits = {});

/// Verdict "none" when beta_1(omega) < 8 or beta_1(omega) < 2 beta_0(omega), else
/// "inconclusive". expected may be empty.
ClaimResult check_semidualizing_screen(const MonomialIdeal& ideal, const std::string& expected = "",
                                       const Limits& limits = {});

// --- Betti gaps over R_{d,n} --------------------------------------------------------

/// beta_{i+1}(M) - beta_i(M) >= d-1 for i >= 2 (i >= 1 when d = 2 or n = 2) and
/// >= C(d+n-1, d-1) - 1 for i >= 2, through beta_{i_max}. Skipped for free M.
ClaimResult check_gap_bounds(std::size_t d, std::size_t n, const std::string& module_name, std::size_t i_max,
                             std::uint32_t p = kDefaultPrime, const Limits& limits = {});

/// R/(x_1^{n-1}) over R_{d,n}: beta_2 - beta_1 = d-1, and beta_1 = beta_0 = 1.
ClaimResult check_example_e1(std::size_t d, std::size_t n, std::uint32_t p = kDefaultPrime);

/// M = R/(x_1 x_2) over R_{2,2}: beta = (1, 1, 2, 4) and beta_3 - beta_2 = C(3,1) - 1.
ClaimResult check_example_sh1e(std::uint32_t p = kDefaultPrime);

/// For M* = Hom_R(M, R): beta_{i+1}(M*) - beta_i(M*) >= d-1 for i >= 0 and
/// beta_1(M*) - beta_0(M) >= d. Skipped for free M.
ClaimResult check_dual_gap(std::size_t d, std::size_t n, const std::string& module_name, std::size_t i_max,
                           std::uint32_t p = kDefaultPrime, const Limits& limits = {});

/// A = S/(f) standard graded with e = d variables, Ord(A) = least generator degree > 1,
/// 1 < n <= Ord(A): the gap bound for M over A/m^n and for omega.
ClaimResult check_mor1(const MonomialIdeal& relations, std::size_t n, const std::string& module_name,
                       std::size_t i_max, const Limits& limits = {});

/// (X,Y)-primary I, R = k[X,Y]/I^n: beta_{i+1}(M) - beta_i(M) >= 1 for i >= 2. Conjecture.
ClaimResult check_xy_primary(const MonomialIdeal& ideal, std::size_t n, const std::string& module_name,
                             std::size_t i_max, const Limits& limits = {});

// --- types of quotients of S ----------------------------------------------------------

/// J, K m-primary: type(S/JK) >= 2, and >= 3 when d >= 3.
ClaimResult check_type_product(const MonomialIdeal& j, const MonomialIdeal& k);

/// type(S/m^t K) >= mu(m^{t-1} K) >= d for m-primary K.
ClaimResult check_m_times_primary(std::size_t t, const MonomialIdeal& k);

/// Radical J of height l >= 2, n >= 2: type(S/J^n) >= C(n+l-2, l-1) and >= 2.
ClaimResult check_radical_power(const MonomialIdeal& j, std::size_t n);

/// J = (x_1^{a_1}, .., x_d^{a_d}): type(S/J^n) >= d; for n = 2, type = d and the
/// elements x_i^{a_i} * prod_j x_j^{a_j - 1} form a socle basis.
ClaimResult check_ci_power(const std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p = kDefaultPrime);

/// Generically complete-intersection J of height 1 < l < d: S/J^n not Gorenstein,
/// type >= l when CM, and type(S/J^2) = l when S/J^2 is CM.
ClaimResult check_locally_ci(const MonomialIdeal& j, std::size_t n);

/// beta_{d-1}(S/m^t K) >= 2d-1 and beta_d(S/m^t K) >= mu(m^{t-1} K) >= d.
ClaimResult check_beta_d_minus_1(std::size_t t, const MonomialIdeal& k);

/// Height-two I = JK: S/I not Gorenstein, and type = mu(I) - 1 >= 2 when CM.
ClaimResult check_hilbert_burch_type(const MonomialIdeal& j, const MonomialIdeal& k);

/// I = JK with (m/I)^2 = 0: type(S/I) >= height(I) = d, with equality.
ClaimResult check_minimal_multiplicity(const MonomialIdeal& j, const MonomialIdeal& k);

/// Monomial prime P (variables in `support`) and P-primary K: type(S/PK) >= height(PK)
/// when S/PK is CM.
ClaimResult check_prime_times_primary(const std::vector<std::size_t>& support, const MonomialIdeal& k);

// --- helpers shared with the tests ------------------------------------------------------

/// J localized at the monomial prime generated by `support`: variables outside set to 1.
MonomialIdeal localize_at(const MonomialIdeal& j, const std::vector<std::size_t>& support);
/// Minimal monomial primes of J, as sorted variable index lists.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal& j);
/// Monomial ideal generated by pairwise coprime monomials.
bool is_monomial_complete_intersection(const MonomialIdeal& j);

}  // namespace artinres
