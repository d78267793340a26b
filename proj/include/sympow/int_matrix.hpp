// Dense matrices over arbitrary-precision integers.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(long n);
  static IntMatrix diagonal(const std::vector<Int>& d);
  static IntMatrix from_columns(long rows, const std::vector<std::vector<Int>>& cols);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(const Int& s) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  std::vector<Int> column(long j) const;
  std::vector<Int> row(long i) const;
  void set_column(long j, const std::vector<Int>& v);
  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * vector
  IntMatrix with_appended_columns(const IntMatrix& o) const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;

  // Exact determinant by fraction-free elimination; square matrices only.
  Int determinant() const;

  std::string str() const;

 private:
  long rows_, cols_;
  std::vector<Int> a_;  // row-major
};

}  // namespace sympow
