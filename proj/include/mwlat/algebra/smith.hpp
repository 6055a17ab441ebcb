#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mwlat/algebra/rational.hpp"

namespace mwlat {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  std::vector<Integer> column(std::size_t j) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
Integer determinant(const IntMatrix& a);  // exact (Bareiss)

// u * A * v = D with D "diagonal" (rows x cols), d = the min(rows, cols) diagonal
// entries: nonnegative, d[i] | d[i+1], zeros last. u and v are unimodular.
struct SmithForm {
  std::vector<Integer> d;
  IntMatrix u;
  IntMatrix v;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Columns form a Z-basis of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace mwlat
