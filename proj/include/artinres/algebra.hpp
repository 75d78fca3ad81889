#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "artinres/monomial.hpp"

namespace artinres {

class ArtinianAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

/// R = S/I for an artinian monomial ideal I, as a finite-dimensional graded algebra on
/// the standard monomials. Basis index order is the canonical monomial order, so each
/// degree occupies a contiguous block.
class ArtinianAlgebra {
 public:
  /// Throws HypothesisError when I is not artinian (or is the unit ideal), and
  /// ResourceError when the basis would exceed max_length.
  static AlgebraPtr build(const MonomialIdeal& ideal, std::size_t max_length = 200'000);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const RingSpec& ring() const noexcept { return ideal_.ring(); }
  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t num_vars() const noexcept { return ring().num_vars; }

  std::size_t length() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const Monomial& monomial(std::size_t b) const { return basis_[b]; }
  std::uint32_t degree_of(std::size_t b) const { return basis_[b].degree(); }
  /// Highest degree with a nonzero component (the socle degree of m-primary powers).
  std::size_t top_degree() const noexcept { return dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::int64_t degree) const;
  /// Basis indices of degree j are [degree_begin(j), degree_begin(j) + dim(j)).
  std::size_t degree_begin(std::size_t j) const { return begin_[j]; }

  /// Index of x_v * basis[b], or -1 when the product lies in I.
  std::int64_t times_var(std::size_t v, std::size_t b) const { return mult_[v][b]; }
  /// Index of basis[a] * basis[b], or -1.
  std::int64_t times(std::size_t a, std::size_t b) const;
  /// Index of a monomial, or -1 when it lies in I.
  std::int64_t index_of(const Monomial& m) const;
  /// For b > 0: a pair (v, c) with basis[b] = x_v * basis[c], v the first variable of basis[b].
  std::pair<std::size_t, std::size_t> split_first(std::size_t b) const { return split_[b]; }

 private:
  explicit ArtinianAlgebra(MonomialIdeal ideal);

  MonomialIdeal ideal_;
  Modulus mod_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> begin_;
  std::vector<std::vector<std::int64_t>> mult_;
  std::vector<std::pair<std::size_t, std::size_t>> split_;
  std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

}  // namespace artinres
