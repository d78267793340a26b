// Multiplication tables of finite groups and their conjugacy structure.
#pragma once

#include <vector>

namespace sympow {

class CayleyTable {
 public:
  // mult[a][b] = index of a*b. Group axioms are verified (this is the
  // ingestion gate for file-supplied tables).
  explicit CayleyTable(std::vector<std::vector<long>> mult);

  long size() const { return n_; }
  long mul(long a, long b) const { return mult_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  long identity() const { return identity_; }
  long inverse(long a) const { return inverse_[static_cast<size_t>(a)]; }
  long power(long a, long k) const;  // any integer k
  long element_order(long a) const;
  long exponent() const;

  // Conjugacy classes ordered by smallest member, members ascending.
  const std::vector<std::vector<long>>& conjugacy_classes() const { return classes_; }
  long conjugacy_class_of(long a) const { return class_of_[static_cast<size_t>(a)]; }

 private:
  long n_;
  std::vector<std::vector<long>> mult_;
  long identity_ = -1;
  std::vector<long> inverse_;
  std::vector<std::vector<long>> classes_;
  std::vector<long> class_of_;
};

}  // namespace sympow
