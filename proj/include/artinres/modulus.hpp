#pragma once

#include <cstdint>

namespace artinres {

inline constexpr std::uint32_t kDefaultPrime = 32003;
// Products of two residues plus one residue must fit in 32 bits: p(p-1) < 2^32.
inline constexpr std::uint32_t kMaxPrime = 65521;

bool is_prime(std::uint64_t n);

/// A prime modulus p < 2^16 with a precomputed Barrett constant floor(2^32 / p).
class Modulus {
 public:
  explicit Modulus(std::uint32_t p = kDefaultPrime);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t barrett() const noexcept { return barrett_; }

  std::uint32_t reduce(std::uint64_t x) const noexcept { return static_cast<std::uint32_t>(x % p_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
  std::uint32_t inv(std::uint32_t a) const;
  /// Maps a signed integer to its residue.
  std::uint32_t from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t barrett_;
};

}  // namespace artinres
