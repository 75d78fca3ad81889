#include "artinres/modulus.hpp"

#include <string>

#include "artinres/errors.hpp"

namespace artinres {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

Modulus::Modulus(std::uint32_t p) : p_(p), barrett_(0) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw InputError("characteristic " + std::to_string(p) + " exceeds the supported maximum " +
                     std::to_string(kMaxPrime));
  }
  barrett_ = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

std::uint32_t Modulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace artinres
