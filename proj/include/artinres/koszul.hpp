#pragma once

// Graded Betti numbers over the polynomial ring S = k[x_1..x_d] via Koszul homology.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinres/module.hpp"
#include "artinres/monomial.hpp"

namespace artinres {

struct BettiTable {
  /// (i, j) -> beta_{i,j}; only nonzero entries are stored.
  std::map<std::pair<std::size_t, std::int64_t>, std::uint64_t> entries;

  std::uint64_t at(std::size_t i, std::int64_t j) const;
  std::uint64_t total(std::size_t i) const;
  /// Largest i with a nonzero entry.
  std::size_t pd() const;
  /// beta_0 .. beta_pd.
  std::vector<std::uint64_t> totals() const;
  /// Internal degrees j with beta_{i,j} != 0, ascending.
  std::vector<std::int64_t> degrees(std::size_t i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// beta^S_{i,j}(S/I) from the multigraded Koszul complex over the box [0, lcm(I)].
/// Throws ResourceError when the box has more than max_box points.
BettiTable graded_betti(const MonomialIdeal& ideal, std::uint64_t max_box = 20'000'000);

/// beta^S_{i,j}(M) of an R-module regarded as an S-module.
BettiTable graded_betti_module(const GradedModule& m, const Limits& limits = {});

/// The Koszul differential Lambda^i k^d (x) (S/I)_{j-i} -> Lambda^{i-1} k^d (x) (S/I)_{j-i+1}
/// in one total degree, with basis pairs (subset mask ascending, standard monomial in
/// canonical order).
struct KoszulSlice {
  std::size_t i = 0;
  std::int64_t j = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  SparseMatrix differential;
};

KoszulSlice koszul_slice(const MonomialIdeal& ideal, std::size_t i, std::int64_t j);

/// dim H_i(x; S/I)_j from dense total-degree slices.
std::uint64_t koszul_slice_betti(const MonomialIdeal& ideal, std::size_t i, std::int64_t j);

/// Rank over S of the i-th syzygy module of S/I: sum_{k >= i} (-1)^{k-i} beta_k.
/// Throws InputError unless 1 <= i <= pd.
std::int64_t syzygy_rank(const BettiTable& table, std::size_t i);

/// pd(S/I) = height(I).
bool is_cohen_macaulay(const MonomialIdeal& ideal, const BettiTable& table);
bool is_cohen_macaulay(const MonomialIdeal& ideal);

struct LinearityReport {
  bool linear = false;
  /// The common generator degree when the generators are equigenerated, else 0.
  std::uint32_t q = 0;
};

/// beta_{i,j}(S/I) != 0 for i >= 1 only when j = q + i - 1.
LinearityReport has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table);

/// beta_c(S/I) with c = pd = height; equals the Cohen-Macaulay type. Throws
/// HypothesisError when S/I is not Cohen-Macaulay.
std::uint64_t cm_type_via_S(const MonomialIdeal& ideal, const BettiTable& table);
std::uint64_t cm_type_via_S(const MonomialIdeal& ideal);

struct TransposeReport {
  bool applicable = false;
  std::string reason;
  std::uint64_t n_d = 0, n_d_minus_1 = 0;
  std::uint64_t beta0_omega = 0, beta1_omega = 0;
  bool holds() const noexcept { return applicable && n_d == beta0_omega && n_d_minus_1 == beta1_omega; }
};

/// Compares the tail of the S-resolution of S/I with the first Betti numbers of the
/// canonical module over R = S/I.
TransposeReport transpose_consistency(const MonomialIdeal& ideal, const Limits& limits = {});

/// Staircase layout: columns i, rows j - i, "." for zero.
std::string betti_staircase(const BettiTable& table);
/// {"i,j": beta} plus "totals".
nlohmann::json betti_table_json(const BettiTable& table);
/// "i<TAB>j<TAB>beta" lines.
std::string betti_table_tsv(const BettiTable& table);

}  // namespace artinres
