#include "artinres/linalg.hpp"

#include <algorithm>
#include <string>

#include "artinres/errors.hpp"
#include "artinres/kernels.hpp"

namespace artinres {

SparseVec canonicalize(std::vector<Entry> entries, const Modulus& mod) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(entries.size());
  for (const Entry& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = mod.add(out.back().value, e.value);
    } else {
      out.push_back(e);
    }
    if (out.back().value == 0) out.pop_back();
  }
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, std::uint32_t c, const SparseVec& b, const Modulus& mod) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      std::uint32_t v = mod.mul(c, b[j].value);
      if (v != 0) out.push_back({b[j].index, v});
      ++j;
    } else {
      std::uint32_t v = mod.add(a[i].value, mod.mul(c, b[j].value));
      if (v != 0) out.push_back({a[i].index, v});
      ++i;
      ++j;
    }
  }
  return out;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::size_t max_entries) : rows_(rows), cols_(cols) {
  if (cols != 0 && rows > max_entries / cols) {
    throw ResourceError("dense matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the entry cap " + std::to_string(max_entries));
  }
  data_.assign(rows * cols, 0);
}

void DenseMatrix::set_column(std::size_t c, const SparseVec& v) {
  for (const Entry& e : v) at(e.index, c) = e.value;
}

void DenseMatrix::set_row(std::size_t r, const SparseVec& v) {
  for (const Entry& e : v) at(r, e.index) = e.value;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

SparseVec SparseMatrix::apply(const SparseVec& v, const Modulus& mod) const {
  std::vector<Entry> acc;
  for (const Entry& e : v) {
    for (const Entry& t : columns_[e.index]) acc.push_back({t.index, mod.mul(e.value, t.value)});
  }
  return canonicalize(std::move(acc), mod);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVec> cols(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const Entry& e : columns_[c]) cols[e.index].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return SparseMatrix(columns_.size(), std::move(cols));
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

DenseMatrix SparseMatrix::dense(std::size_t max_entries) const {
  DenseMatrix m(rows_, columns_.size(), max_entries);
  for (std::size_t c = 0; c < columns_.size(); ++c) m.set_column(c, columns_[c]);
  return m;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other, const Modulus& mod) const {
  std::vector<SparseVec> cols;
  cols.reserve(other.cols());
  for (const SparseVec& c : other.columns()) cols.push_back(apply(c, mod));
  return SparseMatrix(rows_, std::move(cols));
}

namespace {

std::vector<std::size_t> echelon(DenseMatrix& m, const Modulus& mod, bool reduced) {
  const auto& k = kernels::active();
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && m.at(r, c) == 0) ++r;
    if (r == rows) continue;
    m.swap_rows(rank, r);
    std::uint32_t* pivot_row = m.row(rank).data();
    std::uint32_t lead = pivot_row[c];
    if (lead != 1) k.scale(pivot_row + c, mod.inv(lead), cols - c, mod);
    for (std::size_t i = reduced ? 0 : rank + 1; i < rows; ++i) {
      if (i == rank) continue;
      std::uint32_t* row = m.row(i).data();
      std::uint32_t a = row[c];
      if (a != 0) k.axpy(row + c, pivot_row + c, mod.neg(a), cols - c, mod);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_in_place(DenseMatrix& m, const Modulus& mod) { return echelon(m, mod, true); }

std::size_t rank_in_place(DenseMatrix& m, const Modulus& mod) { return echelon(m, mod, false).size(); }

namespace {

// Rows of the column-sparse map that carry at least one entry, renumbered densely.
struct RowCompression {
  std::vector<std::int64_t> compressed;
  std::size_t count = 0;
};

RowCompression compress_rows(const std::vector<SparseVec>& columns, std::size_t rows) {
  RowCompression rc;
  rc.compressed.assign(rows, -1);
  for (const SparseVec& col : columns) {
    for (const Entry& e : col) {
      if (rc.compressed[e.index] < 0) rc.compressed[e.index] = 0;
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (rc.compressed[r] >= 0) rc.compressed[r] = static_cast<std::int64_t>(rc.count++);
  }
  return rc;
}

DenseMatrix dense_from_columns(const std::vector<SparseVec>& columns, const RowCompression& rc,
                               std::size_t max_entries) {
  DenseMatrix m(rc.count, columns.size(), max_entries);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const Entry& e : columns[c]) m.at(static_cast<std::size_t>(rc.compressed[e.index]), c) = e.value;
  }
  return m;
}

}  // namespace

std::size_t rank_of_columns(const std::vector<SparseVec>& columns, std::size_t rows, const Modulus& mod,
                            std::size_t max_entries) {
  RowCompression rc = compress_rows(columns, rows);
  if (rc.count == 0) return 0;
  DenseMatrix m = dense_from_columns(columns, rc, max_entries);
  return rank_in_place(m, mod);
}

SparseVec KernelBasis::coordinates(const SparseVec& v) const {
  SparseVec out;
  for (const Entry& e : v) {
    std::int64_t pos = position[e.index];
    if (pos >= 0) out.push_back({static_cast<std::uint32_t>(pos), e.value});
  }
  return out;
}

KernelBasis kernel_of_columns(const std::vector<SparseVec>& columns, std::size_t rows, const Modulus& mod,
                              std::size_t max_entries) {
  const std::size_t cols = columns.size();
  KernelBasis kb;
  kb.position.assign(cols, -1);
  RowCompression rc = compress_rows(columns, rows);
  std::vector<std::size_t> pivots;
  DenseMatrix m;
  if (rc.count > 0) {
    m = dense_from_columns(columns, rc, max_entries);
    pivots = rref_in_place(m, mod);
  }
  std::vector<std::int64_t> pivot_row(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<std::int64_t>(r);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] >= 0) continue;
    kb.position[c] = static_cast<std::int64_t>(kb.free_columns.size());
    kb.free_columns.push_back(c);
    std::vector<Entry> v;
    v.push_back({static_cast<std::uint32_t>(c), 1});
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint32_t a = m.at(r, c);
      if (a != 0) v.push_back({static_cast<std::uint32_t>(pivots[r]), mod.neg(a)});
    }
    kb.vectors.push_back(canonicalize(std::move(v), mod));
  }
  return kb;
}

std::vector<std::size_t> complement_coordinates(const std::vector<SparseVec>& vectors, std::size_t dim,
                                                const Modulus& mod, std::size_t max_entries) {
  std::vector<bool> is_pivot(dim, false);
  std::vector<SparseVec> nonzero;
  for (const SparseVec& v : vectors) {
    if (!v.empty()) nonzero.push_back(v);
  }
  if (!nonzero.empty()) {
    DenseMatrix m(nonzero.size(), dim, max_entries);
    for (std::size_t r = 0; r < nonzero.size(); ++r) m.set_row(r, nonzero[r]);
    for (std::size_t c : echelon(m, mod, false)) is_pivot[c] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

}  // namespace artinres
