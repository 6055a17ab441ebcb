#include "mwlat/algebra/smith.hpp"

#include <sstream>
#include <utility>

#include "mwlat/error.hpp"

namespace mwlat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError("ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw MathError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw MathError("matrix dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("matrix dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("matrix dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw MathError("hconcat row mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& x : d)
    if (x != 0) ++r;
  return r;
}

namespace {

// Working state: D = u * A * v maintained under elementary operations.
struct Reducer {
  IntMatrix d, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i -= q * row_k
  void row_axpy(std::size_t i, std::size_t k, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) -= q * d(k, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(k, c);
  }
  // col_j -= q * col_k
  void col_axpy(std::size_t j, std::size_t k, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, j) -= q * d(r, k);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) -= q * v(r, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Moves the smallest nonzero |entry| of the trailing block at (k, k) into (k, k).
  bool pivot_min(std::size_t k) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    Integer best;
    for (std::size_t i = k; i < d.rows(); ++i)
      for (std::size_t j = k; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        Integer a = abs(d(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Reducer r{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    if (!r.pivot_min(k)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (r.d(i, k) == 0) continue;
        r.row_axpy(i, k, floor_div(r.d(i, k), r.d(k, k)));
        if (r.d(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (r.d(k, j) == 0) continue;
        r.col_axpy(j, k, floor_div(r.d(k, j), r.d(k, k)));
        if (r.d(k, j) != 0) dirty = true;
      }
      if (dirty) {
        r.pivot_min(k);
        continue;
      }
      // Row k and column k are clear; enforce divisibility on the trailing block.
      bool fixed = true;
      for (std::size_t i = k + 1; i < m && fixed; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (r.d(i, j) % r.d(k, k) != 0) {
            r.row_axpy(k, i, -1);  // row_k += row_i
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (r.d(k, k) < 0) r.negate_row(k);
  }
  SmithForm s;
  s.d.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) s.d[i] = r.d(i, i);
  s.u = std::move(r.u);
  s.v = std::move(r.v);
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const std::size_t rank = s.rank();
  const std::size_t n = a.cols();
  IntMatrix k(n, n - rank);
  for (std::size_t j = rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - rank) = s.v(i, j);
  return k;
}

}  // namespace mwlat
