#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Smith normal form with unimodular transforms, and the kernel,
// image and solve routines the homology code is built on.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brauer {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero-sized
/// dimensions are allowed and carry their shape (a 2x0 matrix is not a 0x0
/// matrix).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  /// Row literal, e.g. `IntMatrix{{2, 4}, {6, 8}}`. All rows must have equal
  /// length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            const IntVector& diag);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const Integer> entries() const noexcept { return data_; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  /// [this | other]; row counts must agree.
  IntMatrix hstack(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

/// `[[1,2],[3,4]]`; a matrix without rows prints as `[]`.
std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = S with U, V unimodular and S diagonal. The inverses of U and V
/// are tracked alongside so callers can map between the original and the
/// diagonal coordinates in both directions.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  /// min(rows, cols) entries, d1 | d2 | ... , nonnegative, zeros trailing.
  IntVector diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Invariant-factor chain only; skips the transform bookkeeping.
IntVector smith_diagonal(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Columns form a Z-basis of {x : A x = 0}; there are cols - rank of them.
IntMatrix kernel_basis(const IntMatrix& a);

/// Columns form a Z-basis of the column lattice A Z^cols.
IntMatrix image_basis(const IntMatrix& a);

/// Some integral x with A x = b, or nullopt when none exists.
/// Throws SemanticError when b.size() != rows.
std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

}  // namespace brauer
