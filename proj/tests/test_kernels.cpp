#include <random>
#include <vector>

#include "doctest.h"

#include "artinres/errors.hpp"
#include "artinres/kernels.hpp"
#include "artinres/linalg.hpp"

using namespace artinres;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

// Plain 64-bit arithmetic, independent of the Barrett code paths.
void axpy_oracle(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src, std::uint32_t c,
                 std::uint32_t p) {
  for (std::size_t k = 0; k < dst.size(); ++k) {
    dst[k] = static_cast<std::uint32_t>((dst[k] + static_cast<std::uint64_t>(c) * src[k]) % p);
  }
}

}  // namespace

TEST_CASE("scalar kernels match 64-bit arithmetic") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 32003u, 65521u}) {
    const Modulus mod(p);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
      auto dst = random_row(rng, n, p);
      const auto src = random_row(rng, n, p);
      for (std::uint32_t c : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
        auto expect = dst;
        axpy_oracle(expect, src, c, p);
        auto got = dst;
        kernels::scalar_table().axpy(got.data(), src.data(), c, n, mod);
        CHECK(got == expect);

        auto scaled = src;
        kernels::scalar_table().scale(scaled.data(), c, n, mod);
        for (std::size_t k = 0; k < n; ++k) CHECK(scaled[k] == (static_cast<std::uint64_t>(src[k]) * c) % p);
      }
    }
  }
}

#if defined(ARTINRES_HAVE_AVX2)
TEST_CASE("avx2 kernels are bit-identical to scalar, including tails") {
  if (!kernels::available(kernels::Backend::avx2)) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(5);
  const auto& s = kernels::scalar_table();
  const auto& v = kernels::avx2_table();
  for (std::uint32_t p : {2u, 3u, 5u, 32003u, 65519u, 65521u}) {
    const Modulus mod(p);
    for (std::size_t n = 0; n <= 70; ++n) {
      for (int rep = 0; rep < 4; ++rep) {
        auto a = random_row(rng, n, p);
        const auto src = random_row(rng, n, p);
        const std::uint32_t c = rep == 0 ? p - 1 : static_cast<std::uint32_t>(rng() % p);
        auto b = a;
        s.axpy(a.data(), src.data(), c, n, mod);
        v.axpy(b.data(), src.data(), c, n, mod);
        REQUIRE(a == b);
        s.scale(a.data(), c, n, mod);
        v.scale(b.data(), c, n, mod);
        REQUIRE(a == b);
      }
    }
  }
  // Extreme residues everywhere.
  const Modulus mod(65521);
  std::vector<std::uint32_t> a(37, 65520), b(37, 65520), src(37, 65520);
  s.axpy(a.data(), src.data(), 65520, a.size(), mod);
  v.axpy(b.data(), src.data(), 65520, b.size(), mod);
  CHECK(a == b);
}

TEST_CASE("rank agrees across backends") {
  if (!kernels::available(kernels::Backend::avx2)) return;
  std::mt19937_64 rng(11);
  const Modulus mod(32003);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t rows = 5 + rng() % 40, cols = 5 + rng() % 40;
    DenseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = (rng() % 3 == 0) ? static_cast<std::uint32_t>(rng() % 32003) : 0;
    }
    DenseMatrix m2 = m;
    kernels::select(kernels::Backend::scalar);
    const auto piv_s = rref_in_place(m, mod);
    kernels::select(kernels::Backend::avx2);
    const auto piv_v = rref_in_place(m2, mod);
    CHECK(piv_s == piv_v);
    CHECK(m == m2);
  }
  kernels::select(kernels::detect());
}
#endif

TEST_CASE("backend selection") {
  CHECK(kernels::available(kernels::Backend::scalar));
  CHECK(kernels::name(kernels::Backend::scalar) == "scalar");
  kernels::select(kernels::Backend::scalar);
  CHECK(kernels::active().backend == kernels::Backend::scalar);
  if (!kernels::available(kernels::Backend::avx2)) {
    CHECK_THROWS_AS(kernels::select(kernels::Backend::avx2), InputError);
  }
  kernels::select(kernels::detect());
}
