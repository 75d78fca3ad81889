#pragma once

// Exact linear algebra over Z/p: sparse vectors for module elements, dense matrices
// for elimination. All row operations go through the dispatched kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "artinres/modulus.hpp"

namespace artinres {

struct Entry {
  std::uint32_t index;
  std::uint32_t value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by index, no zero values.
using SparseVec = std::vector<Entry>;

/// Sorts, merges duplicate indices, and drops zeros.
SparseVec canonicalize(std::vector<Entry> entries, const Modulus& mod);

/// a + c * b.
SparseVec sparse_axpy(const SparseVec& a, std::uint32_t c, const SparseVec& b, const Modulus& mod);

struct Limits {
  std::size_t max_steps = 12;
  std::size_t max_matrix_entries = 1'000'000;
};

class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Throws ResourceError when rows * cols exceeds the cap.
  DenseMatrix(std::size_t rows, std::size_t cols, std::size_t max_entries = Limits{}.max_matrix_entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void set_column(std::size_t c, const SparseVec& v);
  void set_row(std::size_t r, const SparseVec& v);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

/// Column-sparse matrix: column c is the image of basis vector c.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  SparseMatrix(std::size_t rows, std::vector<SparseVec> columns) : rows_(rows), columns_(std::move(columns)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const SparseVec& column(std::size_t c) const { return columns_[c]; }
  SparseVec& column(std::size_t c) { return columns_[c]; }
  const std::vector<SparseVec>& columns() const noexcept { return columns_; }

  SparseVec apply(const SparseVec& v, const Modulus& mod) const;
  SparseMatrix transpose() const;
  bool is_zero() const;
  DenseMatrix dense(std::size_t max_entries = Limits{}.max_matrix_entries) const;
  /// this * other.
  SparseMatrix compose(const SparseMatrix& other, const Modulus& mod) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> columns_;
};

/// Reduces m to reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(DenseMatrix& m, const Modulus& mod);

/// Forward elimination only; m is destroyed.
std::size_t rank_in_place(DenseMatrix& m, const Modulus& mod);

std::size_t rank_of_columns(const std::vector<SparseVec>& columns, std::size_t rows, const Modulus& mod,
                            std::size_t max_entries = Limits{}.max_matrix_entries);

/// Kernel of a linear map given by its columns. Basis vector for free column f is
/// e_f - sum_r rref[r][f] e_{pivot(r)}, so a kernel element's coordinates are its
/// entries at the free columns.
struct KernelBasis {
  std::vector<std::size_t> free_columns;
  /// position of each column among free_columns, or -1 for pivot columns.
  std::vector<std::int64_t> position;
  std::vector<SparseVec> vectors;

  std::size_t dim() const noexcept { return vectors.size(); }
  /// Coordinates of a vector known to lie in the kernel.
  SparseVec coordinates(const SparseVec& v) const;
};

KernelBasis kernel_of_columns(const std::vector<SparseVec>& columns, std::size_t rows, const Modulus& mod,
                              std::size_t max_entries = Limits{}.max_matrix_entries);

/// Indices c of standard basis vectors e_c spanning a complement of span(vectors) in k^dim.
std::vector<std::size_t> complement_coordinates(const std::vector<SparseVec>& vectors, std::size_t dim,
                                                const Modulus& mod,
                                                std::size_t max_entries = Limits{}.max_matrix_entries);

}  // namespace artinres
