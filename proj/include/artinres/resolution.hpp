#pragma once

// Minimal graded free resolutions over an artinian monomial algebra R.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinres/module.hpp"

namespace artinres {

/// An element of R as a combination of standard monomials (algebra basis indices).
using RElement = SparseVec;

/// Matrix over R between graded free modules; column b is the image of generator b.
struct RMatrix {
  std::vector<std::int64_t> row_degrees;
  std::vector<std::int64_t> col_degrees;
  /// columns[b] lists (row, entry) pairs with nonzero entries, rows ascending.
  std::vector<std::vector<std::pair<std::size_t, RElement>>> columns;

  std::size_t rows() const noexcept { return row_degrees.size(); }
  std::size_t cols() const noexcept { return col_degrees.size(); }
  RElement at(std::size_t row, std::size_t col) const;
  /// No entry has a nonzero constant term.
  bool entries_in_maximal_ideal(const ArtinianAlgebra& alg) const;
};

struct ResolutionR {
  GradedModule module;
  /// generator_degrees[i]: degrees of the basis of F_i.
  std::vector<std::vector<std::int64_t>> generator_degrees;
  /// differentials[i] : F_i -> F_{i-1} for i >= 1; differentials[0] is empty.
  std::vector<RMatrix> differentials;
  /// syzygies[0] = M, syzygies[i] = Syz_i(M) = ker(F_{i-1} -> F_{i-2}) for i >= 1,
  /// computed through the last requested step.
  std::vector<GradedModule> syzygies;
  /// embeddings[i][k]: basis of Syz_i in degree syzygies[i].lo() + k, as vectors in
  /// the coordinates of F_{i-1} (see FreeLayout). embeddings[0] is empty.
  std::vector<std::vector<std::vector<SparseVec>>> embeddings;
  /// Generators of M (elements of M mapped to by the basis of F_0).
  std::vector<ModuleElement> generators;

  std::size_t steps() const noexcept { return generator_degrees.empty() ? 0 : generator_degrees.size() - 1; }
  std::vector<std::uint64_t> betti() const;
  FreeLayout layout(std::size_t i) const { return FreeLayout(module.algebra(), generator_degrees[i]); }
};

/// Resolution through F_steps. Throws ResourceError beyond limits.max_steps or when an
/// elimination exceeds limits.max_matrix_entries.
ResolutionR resolve(const GradedModule& m, std::size_t steps, const Limits& limits = {});

/// Betti numbers of the canonical module of S/I, beta_0 .. beta_steps.
std::vector<std::uint64_t> betti_canonical(const MonomialIdeal& ideal, std::size_t steps, const Limits& limits = {});

struct SyzygyLengthReport {
  std::size_t n = 0;
  std::uint64_t ring_length = 0;
  std::vector<std::uint64_t> betti;
  /// l(Syz_n(omega)).
  std::int64_t lhs = 0;
  /// l(R) * (sum_{i<n} (-1)^{n-1-i} beta_i + (-1)^n).
  std::int64_t rhs = 0;
  bool holds() const noexcept { return lhs == rhs; }
};

SyzygyLengthReport syzygy_length_check(const MonomialIdeal& ideal, std::size_t n, const Limits& limits = {});

/// "i<TAB>beta_i" lines.
std::string betti_tsv(const std::vector<std::uint64_t>& betti);
nlohmann::json betti_json(const std::vector<std::uint64_t>& betti);
/// Human-readable dump of every differential, entry by entry.
std::string resolution_text(const ResolutionR& res);

}  // namespace artinres
