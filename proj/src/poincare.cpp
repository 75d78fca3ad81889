#include "artinres/poincare.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "artinres/errors.hpp"
#include "artinres/resolution.hpp"

namespace artinres {

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<BigInt> coeffs, std::size_t order) : c_(order + 1) {
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = std::move(coeffs[i]);
}

TruncatedPowerSeries TruncatedPowerSeries::from(const std::vector<std::int64_t>& coeffs, std::size_t order) {
  TruncatedPowerSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.c_[i] = coeffs[i];
  return s;
}

TruncatedPowerSeries TruncatedPowerSeries::from(const std::vector<std::uint64_t>& coeffs, std::size_t order) {
  TruncatedPowerSeries s(order);
  for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.c_[i] = coeffs[i];
  return s;
}

std::vector<std::int64_t> TruncatedPowerSeries::to_int64(std::size_t n) const {
  std::vector<std::int64_t> out;
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i <= n && i < c_.size(); ++i) {
    if (c_[i] < lo || c_[i] > hi) throw ResourceError("series coefficient does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(c_[i]));
  }
  return out;
}

namespace {

std::size_t common_order(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  TruncatedPowerSeries r(common_order(a, b));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

TruncatedPowerSeries operator-(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  TruncatedPowerSeries r(common_order(a, b));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  TruncatedPowerSeries r(common_order(a, b));
  const std::size_t n = r.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

TruncatedPowerSeries operator/(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  if (b[0] != 1 && b[0] != -1) throw InputError("series division needs a constant term of +1 or -1");
  TruncatedPowerSeries q(common_order(a, b));
  const std::size_t n = q.order();
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt acc = a[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = b[0] == 1 ? acc : BigInt(-acc);
  }
  return q;
}

TruncatedPowerSeries TruncatedPowerSeries::shifted() const {
  TruncatedPowerSeries r(order());
  for (std::size_t i = 1; i <= order(); ++i) r.c_[i] = c_[i - 1];
  return r;
}

std::string TruncatedPowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt mag = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  os << " + O(t^" << c_.size() << ")";
  return os.str();
}

nlohmann::json TruncatedPowerSeries::to_json() const {
  // Decimal strings once a coefficient leaves the 64-bit range.
  nlohmann::json j = nlohmann::json::array();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : c_) {
    if (c > hi || c < -hi) {
      j.push_back(c.str());
    } else {
      j.push_back(static_cast<std::int64_t>(c));
    }
  }
  return j;
}

TruncatedPowerSeries betti_series(const BettiTable& table, std::size_t order) {
  TruncatedPowerSeries s(order);
  for (const auto& [key, beta] : table.entries) {
    if (key.first <= order) s[key.first] += beta;
  }
  return s;
}

TruncatedPowerSeries golod_poincare(const TruncatedPowerSeries& p_n_s, const TruncatedPowerSeries& p_r_s) {
  TruncatedPowerSeries one(p_r_s.order());
  one[0] = 1;
  return p_n_s / (one - (p_r_s - one).shifted());
}

bool annihilated_by_power(const GradedModule& n, std::size_t k) {
  if (n.is_zero() || k == 0) return n.is_zero();
  const ArtinianAlgebra& alg = *n.algebra();
  if (k > alg.top_degree()) return true;
  const std::size_t begin = alg.degree_begin(k), end = begin + alg.dims()[k];
  for (std::int64_t j = n.lo(); j + static_cast<std::int64_t>(k) <= n.hi(); ++j) {
    for (std::size_t e = 0; e < n.dim(j); ++e) {
      const SparseVec basis_vec{Entry{static_cast<std::uint32_t>(e), 1}};
      for (std::size_t b = begin; b < end; ++b) {
        if (!n.act_monomial(b, j, basis_vec).empty()) return false;
      }
    }
  }
  return true;
}

TruncatedPowerSeries poincare_over_R(const GradedModule& n, std::size_t order, const Limits& limits) {
  const ArtinianAlgebra& alg = *n.algebra();
  const MonomialIdeal& ideal = alg.ideal();
  const std::size_t power = ideal.min_degree();
  if (power < 2 || ideal != ideal_power(maximal_ideal(ideal.ring()), power)) {
    throw HypothesisError("the series formula needs R = S/m^n with n >= 2; got I = " + ideal.to_string());
  }
  if (n.is_zero()) return TruncatedPowerSeries(order);
  const TruncatedPowerSeries p_r_s = betti_series(graded_betti(ideal), order);
  if (annihilated_by_power(n, power - 1)) {
    return golod_poincare(betti_series(graded_betti_module(n, limits), order), p_r_s);
  }
  const ResolutionR res = resolve(n, 1, limits);
  TruncatedPowerSeries out(order);
  out[0] = res.generator_degrees[0].size();
  const GradedModule& syz = res.syzygies[1];
  if (syz.is_zero()) return out;
  return out + golod_poincare(betti_series(graded_betti_module(syz, limits), order), p_r_s).shifted();
}

BigInt closed_form_m2_betti(std::uint64_t e, std::uint64_t i) {
  if (i == 0) return BigInt(e);
  BigInt p = 1;
  for (std::uint64_t k = 1; k < i; ++k) p *= e;
  return p * (BigInt(e) * e - 1);
}

std::uint64_t binomial_betti_power_ideal(std::uint64_t d, std::uint64_t n) {
  if (d == 0 || n == 0) throw InputError("need d >= 1 and n >= 1");
  return binomial(d + n - 2, d - 1);
}

std::uint64_t power_ideal_generator_count(std::uint64_t d, std::uint64_t n) {
  if (d == 0) throw InputError("need d >= 1");
  return binomial(d + n - 1, d - 1);
}

}  // namespace artinres
