#pragma once

// Finitely generated graded modules over an artinian monomial algebra R, stored as a
// graded vector space with one degree-raising matrix per variable and degree.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "artinres/algebra.hpp"
#include "artinres/linalg.hpp"

namespace artinres {

class GradedModule {
 public:
  GradedModule() = default;
  /// dims[k] is the dimension in degree lo + k. actions[v][k] maps degree lo + k to
  /// lo + k + 1 (a dims[k+1] x dims[k] matrix; the last one has zero rows). Leading
  /// and trailing zero components are trimmed. Throws InputError on shape mismatch.
  GradedModule(AlgebraPtr algebra, std::int64_t lo, std::vector<std::size_t> dims,
               std::vector<std::vector<SparseMatrix>> actions);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Modulus& modulus() const { return alg_->modulus(); }
  std::size_t num_vars() const { return alg_->num_vars(); }

  bool is_zero() const noexcept { return dims_.empty(); }
  /// Lowest and highest degrees with nonzero components; hi < lo for the zero module.
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(dims_.size()) - 1; }
  std::size_t dim(std::int64_t degree) const;
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t length() const noexcept;

  /// Multiplication by x_v from degree j to j + 1 (empty matrix outside the range).
  const SparseMatrix& action(std::size_t v, std::int64_t degree) const;
  SparseVec act(std::size_t v, std::int64_t degree, const SparseVec& x) const;
  /// Multiplication by the standard monomial with algebra index b.
  SparseVec act_monomial(std::size_t b, std::int64_t degree, const SparseVec& x) const;

  /// Checks commutation of the actions and that every generator of I acts as zero.
  /// Throws std::logic_error on violation.
  void validate() const;

  friend bool operator==(const GradedModule& a, const GradedModule& b);

 private:
  AlgebraPtr alg_;
  std::int64_t lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseMatrix>> actions_;
  SparseMatrix empty_;
};

/// R as a module over itself.
GradedModule ring_module(const AlgebraPtr& alg);
/// R/JR = S/(I + J). The unit ideal gives the zero module.
GradedModule cyclic_module(const AlgebraPtr& alg, const MonomialIdeal& j);
/// k = R/m.
GradedModule residue_field(const AlgebraPtr& alg);

/// Basis of a free module F = sum_h R(-deg_h): in each degree t, the pairs (h, u) with
/// deg_h + deg(u) = t, ordered by h and then by the algebra index of u.
class FreeLayout {
 public:
  FreeLayout() = default;
  FreeLayout(AlgebraPtr alg, std::vector<std::int64_t> generator_degrees);

  const std::vector<std::int64_t>& generator_degrees() const noexcept { return degs_; }
  std::size_t rank() const noexcept { return degs_.size(); }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  std::size_t dim(std::int64_t t) const;
  /// Position of (h, u) inside degree deg_h + deg(u).
  std::size_t position(std::size_t h, std::size_t u) const;
  /// (h, u) at a position of degree t.
  std::pair<std::size_t, std::size_t> element(std::int64_t t, std::size_t pos) const;

  GradedModule module() const;

 private:
  AlgebraPtr alg_;
  std::vector<std::int64_t> degs_;
  std::int64_t lo_ = 0, hi_ = -1;
  // For degree t (offset by lo_): the (h, u) list, and per generator the start offset.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> elems_;
  std::vector<std::vector<std::size_t>> start_;
};

GradedModule free_module(const AlgebraPtr& alg, const std::vector<std::int64_t>& generator_degrees);

/// A homogeneous element: a vector in one degree.
struct ModuleElement {
  std::int64_t degree;
  SparseVec vec;
};

/// M / (submodule generated by the given elements).
GradedModule quotient(const GradedModule& m, const std::vector<ModuleElement>& relations,
                      std::size_t max_entries = Limits{}.max_matrix_entries);

struct SocleData {
  /// Per degree, starting at the module's lo.
  std::vector<std::size_t> dims;
  std::int64_t lo = 0;
  std::size_t type = 0;
  /// Basis vectors of the socle, per degree.
  std::vector<std::vector<SparseVec>> basis;
};

SocleData socle(const GradedModule& m, std::size_t max_entries = Limits{}.max_matrix_entries);

/// Coordinates of (mM)_j spanning vectors: images of all variable actions into degree j.
std::vector<SparseVec> maximal_ideal_image(const GradedModule& m, std::int64_t j);

/// dim M/mM.
std::size_t minimal_generator_count(const GradedModule& m, std::size_t max_entries = Limits{}.max_matrix_entries);
/// Degree of each minimal generator, ascending.
std::vector<std::int64_t> generator_degrees(const GradedModule& m,
                                            std::size_t max_entries = Limits{}.max_matrix_entries);

/// Hom_k(M, k) with the grading reflected so the result starts in degree 0: the
/// component in degree j is dual to M_{hi - j}.
GradedModule matlis_dual(const GradedModule& m);

/// Canonical module of R, as the Matlis dual of R.
GradedModule canonical_module(const AlgebraPtr& alg);

struct RandomModuleShape {
  std::size_t max_generators = 3;
  std::size_t max_relations = 3;
  /// Generators sit in degrees 0..max_generator_degree.
  std::int64_t max_generator_degree = 1;
};

/// Cokernel of a random homogeneous presentation; deterministic for a given seed.
GradedModule random_finite_length_module(const AlgebraPtr& alg, std::uint64_t seed,
                                         const RandomModuleShape& shape = {});

nlohmann::json module_to_json(const GradedModule& m);
/// Rebuilds a module over alg; throws InputError when the JSON does not describe a
/// valid module over that algebra.
GradedModule module_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

}  // namespace artinres
