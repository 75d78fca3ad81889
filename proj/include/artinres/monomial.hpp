#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artinres/modulus.hpp"

namespace artinres {

/// k[x_1..x_d] with k = Z/p. Variable names are cosmetic and ignored by ==.
struct RingSpec {
  std::size_t num_vars = 1;
  std::uint32_t char_p = kDefaultPrime;
  std::vector<std::string> names;

  RingSpec() = default;
  /// Throws InputError for d = 0 or a non-prime / oversized characteristic.
  RingSpec(std::size_t d, std::uint32_t p = kDefaultPrime, std::vector<std::string> var_names = {});

  Modulus modulus() const { return Modulus(char_p); }
  std::string var_name(std::size_t i) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.num_vars == b.num_vars && a.char_p == b.char_p;
  }
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t d) { return Monomial(std::vector<std::uint32_t>(d, 0)); }
  static Monomial variable(std::size_t d, std::size_t i, std::uint32_t power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial squarefree_part() const;
  bool is_pure_power() const;
  /// Index of the first variable with positive exponent (the variable of a pure power).
  std::size_t first_variable() const;

  std::string to_string(const RingSpec& ring) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Canonical order: by degree, then lexicographically with larger leading exponents
  /// first, so x^2 < x*y < y^2 in k[x,y].
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Minimal generating set in canonical order. No generators means the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes gens; throws InputError when a monomial has the wrong variable count.
  MonomialIdeal(RingSpec ring, std::vector<Monomial> gens);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].degree() == 0; }
  bool contains(const Monomial& m) const;
  /// Containment of ideals: every generator of other lies in this.
  bool contains(const MonomialIdeal& other) const;
  std::uint32_t min_degree() const;
  std::uint32_t max_degree() const;
  /// lcm of all minimal generators.
  Monomial lcm() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  RingSpec ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const std::vector<Monomial>& gens, const RingSpec& ring);
MonomialIdeal ideal_product(const MonomialIdeal& j, const MonomialIdeal& k);
/// n = 0 gives the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& j, std::size_t n);
MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k);
MonomialIdeal maximal_ideal(const RingSpec& ring);
/// (x_1^{a_1}, ..., x_d^{a_d}).
MonomialIdeal pure_power_ideal(const RingSpec& ring, const std::vector<std::uint32_t>& a);

/// Smallest set of variables meeting every generator's support. Throws HypothesisError
/// for the zero or unit ideal and ResourceError for d > 16.
std::size_t height(const MonomialIdeal& i);
MonomialIdeal radical(const MonomialIdeal& i);
bool is_radical(const MonomialIdeal& i);
/// Every variable has a pure power among the generators. False for the unit ideal.
bool is_artinian(const MonomialIdeal& i);

/// Exact C(a, b); 0 when b > a. Throws ResourceError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

}  // namespace artinres
