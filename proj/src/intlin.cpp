#include "brauer/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "brauer/errors.hpp"

namespace brauer {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw SemanticError("matrix entry count does not match its shape");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw SemanticError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols,
                              const IntVector& diag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) {
    m(i, i) = diag[i];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw SemanticError("column length does not match row count");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& v) { return sgn(v) == 0; });
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw SemanticError("column range out of bounds");
  IntMatrix m(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw SemanticError("hstack row mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    mpz_addmul((*this)(dst, j).get_mpz_t(), factor.get_mpz_t(),
               (*this)(src, j).get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_addmul((*this)(i, dst).get_mpz_t(), factor.get_mpz_t(),
               (*this)(i, src).get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer& v = (*this)(i, j);
    mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  }
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& v = (*this)(i, j);
    mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw SemanticError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw SemanticError("matrix-vector shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      mpz_addmul(y[i].get_mpz_t(), a(i, k).get_mpz_t(), x[k].get_mpz_t());
    }
  }
  return y;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << to_string(m);
}

namespace {

// Smith reduction on a working copy. When `track` is false the transform
// matrices stay empty and only S is reduced.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& a, bool track) : s_(a), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(a.rows());
      u_inv_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
      v_inv_ = IntMatrix::identity(a.cols());
    }
  }

  void run() {
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_min_pivot(t, t, s_.rows(), t, s_.cols())) break;
      reduce_at(t);
      if (sgn(s_(t, t)) < 0) negate_row(t);
    }
  }

  SmithForm result() && {
    SmithForm f;
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    f.diagonal.resize(limit);
    for (std::size_t i = 0; i < limit; ++i) {
      f.diagonal[i] = s_(i, i);
      if (sgn(f.diagonal[i]) != 0) ++f.rank;
    }
    f.S = std::move(s_);
    f.U = std::move(u_);
    f.V = std::move(v_);
    f.U_inverse = std::move(u_inv_);
    f.V_inverse = std::move(v_inv_);
    return f;
  }

 private:
  // Moves the nonzero entry of least absolute value in rows [r0, r1) x cols
  // [c0, c1) to (t, t). Returns false when the block is zero.
  bool bring_min_pivot(std::size_t t, std::size_t r0, std::size_t r1,
                       std::size_t c0, std::size_t c1) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        const Integer& v = s_(i, j);
        if (sgn(v) == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0) {
          found = true;
          bi = i;
          bj = j;
          if (v == 1 || v == -1) goto done;
        }
      }
    }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    Integer q;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (sgn(s_(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (sgn(s_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (sgn(s_(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (sgn(s_(t, j)) != 0) clean = false;
      }
      if (!clean) {
        pivot_from_cross(t);
        continue;
      }
      // Row t and column t are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s_.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
          if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  // After a partial elimination pass, the smallest entry of row t / column t
  // (remainders are strictly smaller than the old pivot) becomes the pivot.
  void pivot_from_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (sgn(s_(i, t)) != 0 && mpz_cmpabs(s_(i, t).get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0) {
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < s_.cols(); ++j) {
      if (sgn(s_(t, j)) != 0 && mpz_cmpabs(s_(t, j).get_mpz_t(), s_(bi, bj).get_mpz_t()) < 0) {
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    s_.swap_rows(a, b);
    if (track_) {
      u_.swap_rows(a, b);
      u_inv_.swap_cols(a, b);
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    s_.swap_cols(a, b);
    if (track_) {
      v_.swap_cols(a, b);
      v_inv_.swap_rows(a, b);
    }
  }

  // row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_row_multiple(dst, src, f);
    if (track_) {
      u_.add_row_multiple(dst, src, f);
      u_inv_.add_col_multiple(src, dst, -f);
    }
  }

  // col[dst] += f * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_col_multiple(dst, src, f);
    if (track_) {
      v_.add_col_multiple(dst, src, f);
      v_inv_.add_row_multiple(src, dst, -f);
    }
  }

  void negate_row(std::size_t i) {
    s_.negate_row(i);
    if (track_) {
      u_.negate_row(i);
      u_inv_.negate_col(i);
    }
  }

  IntMatrix s_;
  bool track_;
  IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithReducer r(a, true);
  r.run();
  return std::move(r).result();
}

IntVector smith_diagonal(const IntMatrix& a) {
  SmithReducer r(a, false);
  r.run();
  return std::move(r).result().diagonal;
}

std::size_t rank(const IntMatrix& a) {
  std::size_t r = 0;
  for (const auto& d : smith_diagonal(a))
    if (sgn(d) != 0) ++r;
  return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  return f.V.column_range(f.rank, a.cols() - f.rank);
}

IntMatrix image_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  IntMatrix basis = f.U_inverse.column_range(0, f.rank);
  for (std::size_t j = 0; j < f.rank; ++j) {
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, j) *= f.diagonal[j];
  }
  return basis;
}

std::optional<IntVector> solve_integral(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) {
    throw SemanticError("solve_integral: right-hand side has length " +
                        std::to_string(b.size()) + ", expected " +
                        std::to_string(a.rows()));
  }
  SmithForm f = smith_normal_form(a);
  IntVector c = f.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < f.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), f.diagonal[i].get_mpz_t())) {
        return std::nullopt;
      }
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(),
                   f.diagonal[i].get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw SemanticError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

}  // namespace brauer
