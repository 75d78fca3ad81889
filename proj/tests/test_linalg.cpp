#include <set>
#include <random>

#include "doctest.h"

#include "artinres/errors.hpp"
#include "artinres/linalg.hpp"

using namespace artinres;

namespace {

// Rank by brute force over F_p for tiny matrices: the number of distinct vectors in the
// row space is p^rank.
std::size_t brute_rank(const DenseMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t combos = 1;
  for (std::size_t r = 0; r < rows; ++r) combos *= p;
  std::set<std::vector<std::uint32_t>> span;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::uint32_t> v(cols, 0);
    std::size_t rest = code;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::uint32_t c = rest % p;
      rest /= p;
      for (std::size_t k = 0; k < cols; ++k) v[k] = (v[k] + c * m.at(r, k)) % p;
    }
    span.insert(v);
  }
  std::size_t rank = 0, size = 1;
  while (size < span.size()) {
    size *= p;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("modulus arithmetic") {
  CHECK(is_prime(32003));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
  CHECK_THROWS_AS(Modulus(4), InputError);
  CHECK_THROWS_AS(Modulus(65537), InputError);
  for (std::uint32_t p : {2u, 3u, 32003u, 65521u}) {
    const Modulus m(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 200); ++a) CHECK(m.mul(a, m.inv(a)) == 1);
    CHECK(m.from_int(-1) == p - 1);
    CHECK(m.mul(p - 1, p - 1) == 1);
  }
}

TEST_CASE("rank matches brute-force span enumeration") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Modulus mod(p);
    for (int rep = 0; rep < 40; ++rep) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      DenseMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint32_t>(rng() % p);
      }
      const std::size_t expect = brute_rank(m, p);
      DenseMatrix a = m;
      CHECK(rank_in_place(a, mod) == expect);
      DenseMatrix b = m;
      CHECK(rref_in_place(b, mod).size() == expect);
    }
  }
}

TEST_CASE("kernel basis vectors are killed and have the right count") {
  std::mt19937_64 rng(23);
  const Modulus mod(32003);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
    std::vector<SparseVec> columns(cols);
    for (auto& col : columns) {
      std::vector<Entry> e;
      for (std::size_t r = 0; r < rows; ++r) {
        if (rng() % 2) e.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(rng() % 32003)});
      }
      col = canonicalize(e, mod);
    }
    const SparseMatrix a(rows, columns);
    const KernelBasis ker = kernel_of_columns(columns, rows, mod);
    CHECK(ker.dim() + rank_of_columns(columns, rows, mod) == cols);
    for (const SparseVec& v : ker.vectors) {
      CHECK(a.apply(v, mod).empty());
      const SparseVec coords = ker.coordinates(v);
      CHECK(coords.size() == 1);
    }
  }
}

TEST_CASE("sparse helpers") {
  const Modulus mod(7);
  const SparseVec v = canonicalize({{3, 5}, {1, 2}, {3, 2}, {4, 0}}, mod);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Entry{1, 2});
  const SparseVec w = sparse_axpy(v, 3, SparseVec{{1, 4}}, mod);
  CHECK(w.empty());
  const SparseMatrix a(2, std::vector<SparseVec>{{{0, 1}}, {{1, 3}}});
  CHECK(a.transpose().transpose() == a);
  CHECK(a.compose(a, mod).column(1) == SparseVec{{1, 2}});
  CHECK_THROWS_AS(DenseMatrix(2000, 2000, 1000), ResourceError);
  const auto comp = complement_coordinates({SparseVec{{0, 1}, {1, 1}}}, 3, mod);
  CHECK(comp.size() == 2);
}
