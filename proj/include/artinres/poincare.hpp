#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

#include "artinres/koszul.hpp"
#include "artinres/module.hpp"

namespace artinres {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// c_0 + c_1 t + ... + c_N t^N with exact integer coefficients.
class TruncatedPowerSeries {
 public:
  explicit TruncatedPowerSeries(std::size_t order = kDefaultSeriesOrder) : c_(order + 1) {}
  TruncatedPowerSeries(std::vector<BigInt> coeffs, std::size_t order);
  static TruncatedPowerSeries from(const std::vector<std::int64_t>& coeffs, std::size_t order = kDefaultSeriesOrder);
  static TruncatedPowerSeries from(const std::vector<std::uint64_t>& coeffs, std::size_t order = kDefaultSeriesOrder);

  std::size_t order() const noexcept { return c_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  BigInt& operator[](std::size_t i) { return c_[i]; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  /// Coefficients through t^n as 64-bit integers; throws ResourceError on overflow.
  std::vector<std::int64_t> to_int64(std::size_t n) const;

  friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator-(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  /// Exact quotient; throws InputError unless b has constant term +1 or -1.
  friend TruncatedPowerSeries operator/(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend bool operator==(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) = default;

  /// Multiplication by t, dropping the term beyond the order.
  TruncatedPowerSeries shifted() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::vector<BigInt> c_;
};

/// sum_i beta_i t^i of a Betti table.
TruncatedPowerSeries betti_series(const BettiTable& table, std::size_t order = kDefaultSeriesOrder);

/// P^N_S / (1 - t (P^R_S - 1)).
TruncatedPowerSeries golod_poincare(const TruncatedPowerSeries& p_n_s, const TruncatedPowerSeries& p_r_s);

/// m^k N = 0.
bool annihilated_by_power(const GradedModule& n, std::size_t k);

/// Poincare series of N over R = S/m^n built from S-side Betti numbers. When m^{n-1}
/// annihilates N this is the quotient formula applied to P^N_S; otherwise the formula
/// is applied to the first syzygy, which always is annihilated by m^{n-1}:
/// P^N_R = beta_0(N) + t * P^{Syz_1 N}_R. Throws HypothesisError unless I = m^n, n >= 2.
TruncatedPowerSeries poincare_over_R(const GradedModule& n, std::size_t order = kDefaultSeriesOrder,
                                     const Limits& limits = {});

/// beta_i of the canonical module of A/m^2 with e = embedding dimension: e for i = 0,
/// e^{i-1}(e^2 - 1) for i >= 1.
BigInt closed_form_m2_betti(std::uint64_t e, std::uint64_t i);

/// beta_0 of the canonical module of k[x_1..x_d]/(x)^n: C(d+n-2, d-1).
std::uint64_t binomial_betti_power_ideal(std::uint64_t d, std::uint64_t n);
/// mu((x)^n) in d variables: C(d+n-1, d-1).
std::uint64_t power_ideal_generator_count(std::uint64_t d, std::uint64_t n);

}  // namespace artinres
