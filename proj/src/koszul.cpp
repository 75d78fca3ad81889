#include "artinres/koszul.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>

#include "artinres/errors.hpp"
#include "artinres/resolution.hpp"

namespace artinres {

std::uint64_t BettiTable::at(std::size_t i, std::int64_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(std::size_t i) const {
  std::uint64_t s = 0;
  for (const auto& [key, v] : entries) {
    if (key.first == i) s += v;
  }
  return s;
}

std::size_t BettiTable::pd() const {
  std::size_t p = 0;
  for (const auto& [key, v] : entries) p = std::max(p, key.first);
  return p;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out(entries.empty() ? 0 : pd() + 1, 0);
  for (const auto& [key, v] : entries) out[key.first] += v;
  return out;
}

std::vector<std::int64_t> BettiTable::degrees(std::size_t i) const {
  std::vector<std::int64_t> out;
  for (const auto& [key, v] : entries) {
    if (key.first == i) out.push_back(key.second);
  }
  return out;
}

namespace {

// Subsets of {0..d-1} of each size, masks ascending.
std::vector<std::vector<std::uint32_t>> subsets_by_size(std::size_t d) {
  std::vector<std::vector<std::uint32_t>> out(d + 1);
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  return out;
}

// Sign of removing element t from the wedge e_T: (-1)^{#elements of T below t}.
bool removal_is_negative(std::uint32_t mask, std::size_t t) {
  return (std::popcount(mask & ((1u << t) - 1)) & 1) != 0;
}

std::size_t dense_rank(const std::vector<SparseVec>& columns, std::size_t rows, const Modulus& mod,
                       std::size_t max_entries = Limits{}.max_matrix_entries) {
  if (columns.empty() || rows == 0) return 0;
  return rank_of_columns(columns, rows, mod, max_entries);
}

void require_koszul_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw HypothesisError("Betti numbers of S/I need a nonzero ideal");
  if (ideal.is_unit()) throw HypothesisError("Betti numbers of S/I need a proper ideal");
  if (ideal.ring().num_vars > 16) throw ResourceError("Koszul computations support at most 16 variables");
}

// Standard monomials of S/I in one total degree, canonical order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, std::int64_t degree) {
  const std::size_t d = ideal.ring().num_vars;
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<std::uint32_t> e(d, 0);
  // Enumerate compositions of degree into d parts.
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
    if (v + 1 == d) {
      e[v] = left;
      Monomial m(e);
      if (!ideal.contains(m)) out.push_back(std::move(m));
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, static_cast<std::uint32_t>(degree));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BettiTable graded_betti(const MonomialIdeal& ideal, std::uint64_t max_box) {
  require_koszul_input(ideal);
  const std::size_t d = ideal.ring().num_vars;
  const Modulus mod = ideal.ring().modulus();
  const Monomial l = ideal.lcm();
  unsigned __int128 box = 1;
  for (std::size_t v = 0; v < d; ++v) {
    box *= l[v] + 1;
    if (box > max_box) throw ResourceError("multidegree box exceeds " + std::to_string(max_box) + " points");
  }

  BettiTable table;
  std::vector<std::uint32_t> alpha(d, 0);
  std::vector<std::uint32_t> shifted(d);
  std::vector<std::int64_t> index(1u << d, -1);
  while (true) {
    std::uint32_t support = 0;
    std::uint32_t total_degree = 0;
    for (std::size_t v = 0; v < d; ++v) {
      if (alpha[v] > 0) support |= 1u << v;
      total_degree += alpha[v];
    }
    // Basis of the Koszul complex in multidegree alpha: e_T with T inside the support
    // and x^(alpha - e_T) outside I.
    std::vector<std::vector<std::uint32_t>> basis(d + 1);
    for (std::uint32_t t = support;; t = (t - 1) & support) {
      for (std::size_t v = 0; v < d; ++v) shifted[v] = alpha[v] - ((t >> v) & 1u);
      if (!ideal.contains(Monomial(shifted))) basis[static_cast<std::size_t>(std::popcount(t))].push_back(t);
      if (t == 0) break;
    }
    std::vector<std::size_t> ranks(d + 2, 0);
    for (std::size_t i = 1; i <= d; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      for (std::size_t k = 0; k < basis[i - 1].size(); ++k) index[basis[i - 1][k]] = static_cast<std::int64_t>(k);
      std::vector<SparseVec> cols;
      for (std::uint32_t t : basis[i]) {
        std::vector<Entry> col;
        for (std::size_t v = 0; v < d; ++v) {
          if (!((t >> v) & 1u)) continue;
          std::uint32_t smaller = t & ~(1u << v);
          if (index[smaller] < 0) continue;
          col.push_back({static_cast<std::uint32_t>(index[smaller]), removal_is_negative(t, v) ? mod.neg(1) : 1u});
        }
        cols.push_back(canonicalize(std::move(col), mod));
      }
      for (std::uint32_t t : basis[i - 1]) index[t] = -1;
      ranks[i] = dense_rank(cols, basis[i - 1].size(), mod);
    }
    for (std::size_t i = 0; i <= d; ++i) {
      std::size_t h = basis[i].size() - ranks[i] - ranks[i + 1];
      if (h > 0) table.entries[{i, static_cast<std::int64_t>(total_degree)}] += h;
    }

    std::size_t v = 0;
    while (v < d && alpha[v] == l[v]) alpha[v++] = 0;
    if (v == d) break;
    ++alpha[v];
  }
  return table;
}

KoszulSlice koszul_slice(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  require_koszul_input(ideal);
  const std::size_t d = ideal.ring().num_vars;
  const Modulus mod = ideal.ring().modulus();
  KoszulSlice slice;
  slice.i = i;
  slice.j = j;
  if (i > d) return slice;
  auto subsets = subsets_by_size(d);
  std::vector<Monomial> src_monos = standard_monomials(ideal, j - static_cast<std::int64_t>(i));
  slice.source_dim = subsets[i].size() * src_monos.size();
  if (i == 0) {
    slice.differential = SparseMatrix(0, slice.source_dim);
    return slice;
  }
  std::vector<Monomial> dst_monos = standard_monomials(ideal, j - static_cast<std::int64_t>(i) + 1);
  slice.target_dim = subsets[i - 1].size() * dst_monos.size();
  std::map<std::uint32_t, std::size_t> mask_pos;
  for (std::size_t k = 0; k < subsets[i - 1].size(); ++k) mask_pos[subsets[i - 1][k]] = k;
  std::map<std::vector<std::uint32_t>, std::size_t> mono_pos;
  for (std::size_t k = 0; k < dst_monos.size(); ++k) mono_pos[dst_monos[k].exponents()] = k;

  SparseMatrix diff(slice.target_dim, slice.source_dim);
  std::size_t col = 0;
  for (std::uint32_t t : subsets[i]) {
    for (const Monomial& m : src_monos) {
      std::vector<Entry> entries;
      for (std::size_t v = 0; v < d; ++v) {
        if (!((t >> v) & 1u)) continue;
        Monomial xm = m * Monomial::variable(d, v);
        auto it = mono_pos.find(xm.exponents());
        if (it == mono_pos.end()) continue;
        std::size_t row = mask_pos[t & ~(1u << v)] * dst_monos.size() + it->second;
        entries.push_back({static_cast<std::uint32_t>(row), removal_is_negative(t, v) ? mod.neg(1) : 1u});
      }
      diff.column(col++) = canonicalize(std::move(entries), mod);
    }
  }
  slice.differential = std::move(diff);
  return slice;
}

std::uint64_t koszul_slice_betti(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  const Modulus mod = ideal.ring().modulus();
  KoszulSlice here = koszul_slice(ideal, i, j);
  KoszulSlice up = koszul_slice(ideal, i + 1, j);
  std::size_t r_here = i == 0 ? 0 : dense_rank(here.differential.columns(), here.target_dim, mod);
  std::size_t r_up = dense_rank(up.differential.columns(), up.target_dim, mod);
  return here.source_dim - r_here - r_up;
}

BettiTable graded_betti_module(const GradedModule& m, const Limits& limits) {
  BettiTable table;
  if (m.is_zero()) return table;
  const std::size_t d = m.num_vars();
  const Modulus& mod = m.modulus();
  auto subsets = subsets_by_size(d);
  // rank of d_i in total degree j: Lambda^i (x) M_{j-i} -> Lambda^{i-1} (x) M_{j-i+1}.
  auto rank_of = [&](std::size_t i, std::int64_t j) -> std::size_t {
    if (i == 0 || i > d) return 0;
    const std::int64_t a = j - static_cast<std::int64_t>(i);
    const std::size_t src = m.dim(a), dst = m.dim(a + 1);
    if (src == 0 || dst == 0) return 0;
    std::map<std::uint32_t, std::size_t> mask_pos;
    for (std::size_t k = 0; k < subsets[i - 1].size(); ++k) mask_pos[subsets[i - 1][k]] = k;
    std::vector<SparseVec> cols;
    for (std::uint32_t t : subsets[i]) {
      for (std::size_t b = 0; b < src; ++b) {
        std::vector<Entry> entries;
        for (std::size_t v = 0; v < d; ++v) {
          if (!((t >> v) & 1u)) continue;
          const std::size_t block = mask_pos[t & ~(1u << v)] * dst;
          const bool neg = removal_is_negative(t, v);
          for (const Entry& e : m.action(v, a).column(b)) {
            entries.push_back({static_cast<std::uint32_t>(block + e.index), neg ? mod.neg(e.value) : e.value});
          }
        }
        cols.push_back(canonicalize(std::move(entries), mod));
      }
    }
    return dense_rank(cols, subsets[i - 1].size() * dst, mod, limits.max_matrix_entries);
  };
  for (std::int64_t j = m.lo(); j <= m.hi() + static_cast<std::int64_t>(d); ++j) {
    std::vector<std::size_t> ranks(d + 2, 0);
    for (std::size_t i = 1; i <= d; ++i) ranks[i] = rank_of(i, j);
    for (std::size_t i = 0; i <= d; ++i) {
      std::size_t dim = subsets[i].size() * m.dim(j - static_cast<std::int64_t>(i));
      std::size_t h = dim - ranks[i] - ranks[i + 1];
      if (h > 0) table.entries[{i, j}] = h;
    }
  }
  return table;
}

std::int64_t syzygy_rank(const BettiTable& table, std::size_t i) {
  const std::size_t pd = table.pd();
  if (i < 1 || i > pd) {
    throw InputError("syzygy index " + std::to_string(i) + " outside 1.." + std::to_string(pd));
  }
  std::vector<std::uint64_t> b = table.totals();
  std::int64_t r = 0;
  for (std::size_t k = i; k <= pd; ++k) {
    std::int64_t x = static_cast<std::int64_t>(b[k]);
    r += ((k - i) % 2 == 0) ? x : -x;
  }
  return r;
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const BettiTable& table) {
  return table.pd() == height(ideal);
}

bool is_cohen_macaulay(const MonomialIdeal& ideal) { return is_cohen_macaulay(ideal, graded_betti(ideal)); }

LinearityReport has_linear_resolution(const MonomialIdeal& ideal, const BettiTable& table) {
  LinearityReport r;
  if (ideal.is_zero() || ideal.min_degree() != ideal.max_degree()) return r;
  r.q = ideal.min_degree();
  r.linear = true;
  for (const auto& [key, v] : table.entries) {
    if (key.first >= 1 && key.second != static_cast<std::int64_t>(r.q + key.first - 1)) r.linear = false;
  }
  return r;
}

std::uint64_t cm_type_via_S(const MonomialIdeal& ideal, const BettiTable& table) {
  if (!is_cohen_macaulay(ideal, table)) {
    throw HypothesisError("S/I is not Cohen-Macaulay (pd " + std::to_string(table.pd()) + ", height " +
                          std::to_string(height(ideal)) + ")");
  }
  return table.total(table.pd());
}

std::uint64_t cm_type_via_S(const MonomialIdeal& ideal) { return cm_type_via_S(ideal, graded_betti(ideal)); }

TransposeReport transpose_consistency(const MonomialIdeal& ideal, const Limits& limits) {
  TransposeReport r;
  if (!is_artinian(ideal)) {
    r.reason = "S/I is not artinian";
    return r;
  }
  const std::size_t d = ideal.ring().num_vars;
  BettiTable table = graded_betti(ideal);
  bool power_of_max = ideal == ideal_power(maximal_ideal(ideal.ring()), ideal.min_degree());
  if (!has_linear_resolution(ideal, table).linear && !power_of_max) {
    r.reason = "I does not have a linear resolution";
    return r;
  }
  r.applicable = true;
  r.n_d = table.total(d);
  r.n_d_minus_1 = table.total(d - 1);
  std::vector<std::uint64_t> b = betti_canonical(ideal, 1, limits);
  r.beta0_omega = b[0];
  r.beta1_omega = b[1];
  return r;
}

std::string betti_staircase(const BettiTable& table) {
  if (table.entries.empty()) return "(zero)\n";
  const std::size_t pd = table.pd();
  std::int64_t row_lo = INT64_MAX, row_hi = INT64_MIN;
  for (const auto& [key, v] : table.entries) {
    std::int64_t row = key.second - static_cast<std::int64_t>(key.first);
    row_lo = std::min(row_lo, row);
    row_hi = std::max(row_hi, row);
  }
  std::vector<std::uint64_t> totals = table.totals();
  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << ' ' << std::setw(static_cast<int>(width)) << s; };
  out << std::setw(7) << "";
  for (std::size_t i = 0; i <= pd; ++i) cell(std::to_string(i));
  out << "\n" << std::setw(7) << "total:";
  for (auto t : totals) cell(std::to_string(t));
  out << '\n';
  for (std::int64_t row = row_lo; row <= row_hi; ++row) {
    out << std::setw(6) << row << ':';
    for (std::size_t i = 0; i <= pd; ++i) {
      std::uint64_t v = table.at(i, row + static_cast<std::int64_t>(i));
      cell(v == 0 ? "." : std::to_string(v));
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json betti_table_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, v] : table.entries) entries[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
  return {{"entries", entries}, {"totals", table.totals()}, {"pd", table.pd()}};
}

std::string betti_table_tsv(const BettiTable& table) {
  std::string out = "i\tj\tbeta\n";
  for (const auto& [key, v] : table.entries) {
    out += std::to_string(key.first) + '\t' + std::to_string(key.second) + '\t' + std::to_string(v) + '\n';
  }
  return out;
}

}  // namespace artinres
