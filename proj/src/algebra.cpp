#include "artinres/algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "artinres/errors.hpp"

namespace artinres {

ArtinianAlgebra::ArtinianAlgebra(MonomialIdeal ideal) : ideal_(std::move(ideal)), mod_(ideal_.ring().modulus()) {}

AlgebraPtr ArtinianAlgebra::build(const MonomialIdeal& ideal, std::size_t max_length) {
  if (!is_artinian(ideal)) {
    throw HypothesisError("S/I is not artinian for I = " + ideal.to_string() +
                          "; the artinian engine needs a pure power of every variable "
                          "(use the koszul command for Betti numbers over S)");
  }
  std::shared_ptr<ArtinianAlgebra> a(new ArtinianAlgebra(ideal));
  const std::size_t d = ideal.ring().num_vars;

  std::vector<Monomial> layer{Monomial::one(d)};
  while (!layer.empty()) {
    a->dims_.push_back(layer.size());
    a->basis_.insert(a->basis_.end(), layer.begin(), layer.end());
    if (a->basis_.size() > max_length) {
      throw ResourceError("S/I has more than " + std::to_string(max_length) + " standard monomials");
    }
    std::set<Monomial> next;
    for (const Monomial& m : layer) {
      for (std::size_t v = 0; v < d; ++v) {
        Monomial n = m * Monomial::variable(d, v);
        if (!ideal.contains(n)) next.insert(n);
      }
    }
    layer.assign(next.begin(), next.end());
  }

  std::size_t offset = 0;
  for (std::size_t dim : a->dims_) {
    a->begin_.push_back(offset);
    offset += dim;
  }
  for (std::size_t b = 0; b < a->basis_.size(); ++b) a->index_.emplace(a->basis_[b].exponents(), b);

  a->mult_.assign(d, std::vector<std::int64_t>(a->basis_.size(), -1));
  a->split_.assign(a->basis_.size(), {0, 0});
  for (std::size_t b = 0; b < a->basis_.size(); ++b) {
    const Monomial& m = a->basis_[b];
    for (std::size_t v = 0; v < d; ++v) a->mult_[v][b] = a->index_of(m * Monomial::variable(d, v));
    if (b > 0) {
      std::size_t v = m.first_variable();
      a->split_[b] = {v, static_cast<std::size_t>(a->index_of(m / Monomial::variable(d, v)))};
    }
  }
  return a;
}

std::size_t ArtinianAlgebra::dim(std::int64_t degree) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= dims_.size()) return 0;
  return dims_[static_cast<std::size_t>(degree)];
}

std::int64_t ArtinianAlgebra::times(std::size_t a, std::size_t b) const {
  return index_of(basis_[a] * basis_[b]);
}

std::int64_t ArtinianAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m.exponents());
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

}  // namespace artinres
