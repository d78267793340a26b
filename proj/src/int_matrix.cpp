#include "sympow/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sympow {

IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimensions");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<long>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<long>(rows.begin()->size());
  a_.reserve(static_cast<size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<long>(r.size()) != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(static_cast<long>(d.size()), static_cast<long>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<long>(i), static_cast<long>(i)) = d[i];
  return m;
}

IntMatrix IntMatrix::from_columns(long rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<long>(cols[j].size()) != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (long i = 0; i < rows; ++i) m.at(i, static_cast<long>(j)) = cols[j][static_cast<size_t>(i)];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: sum dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: difference dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::column(long j) const {
  std::vector<Int> v(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(long i) const {
  std::vector<Int> v(static_cast<size_t>(cols_));
  for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

void IntMatrix::set_column(long j, const std::vector<Int>& v) {
  if (static_cast<long>(v.size()) != rows_)
    throw std::invalid_argument("set_column: length mismatch");
  for (long i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<long>(v.size()) != cols_)
    throw std::invalid_argument("IntMatrix::apply: length mismatch");
  std::vector<Int> r(static_cast<size_t>(rows_), Int(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

IntMatrix IntMatrix::with_appended_columns(const IntMatrix& o) const {
  if (o.rows_ != rows_ && o.cols_ != 0)
    throw std::invalid_argument("with_appended_columns: row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_permutation() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i) {
    long ones = 0;
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      if (at(i, j) != 1) return false;
      ++ones;
    }
    if (ones != 1) return false;
  }
  for (long j = 0; j < cols_; ++j) {
    long ones = 0;
    for (long i = 0; i < rows_; ++i) ones += (at(i, j) == 1);
    if (ones != 1) return false;
  }
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  const long n = rows_;
  if (n == 0) return Int(1);
  IntMatrix m = *this;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j).get_str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace sympow
