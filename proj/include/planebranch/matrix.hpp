#pragma once

// Dense exact matrices: integer matrices for resolution combinatorics
// (proximity, intersection) and rational matrices with reduced row echelon
// form / kernel extraction for the linear systems of the Saito oracle.

#include <vector>

#include "planebranch/rational.hpp"

namespace planebranch {

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  static IntMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& at(long i, long j) { return a_[i * cols_ + j]; }
  const Int& at(long i, long j) const { return a_[i * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;
  IntMat transposed() const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::vector<Int> mul_vec(const std::vector<Int>& v) const;

 private:
  long rows_, cols_;
  std::vector<Int> a_;
};

// Exact inverse of an upper-triangular matrix with unit diagonal (integer
// back-substitution; the inverse is again integral).
IntMat inverse_unitriangular(const IntMat& u);

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rat& at(long i, long j) { return a_[i * cols_ + j]; }
  const Rat& at(long i, long j) const { return a_[i * cols_ + j]; }

  std::vector<Rat> mul_vec(const std::vector<Rat>& v) const;

 private:
  long rows_, cols_;
  std::vector<Rat> a_;
};

// Reduced row echelon form (exact Gauss-Jordan).
struct Rref {
  RatMat reduced;
  std::vector<long> pivot_cols;  // increasing
  std::vector<long> free_cols;   // increasing, complement of pivot_cols
  long rank = 0;
};
Rref rref(RatMat m);  // by value: reduced in place

// Kernel vector with 1 at `free_col` and 0 at the other free columns; its
// support is contained in {free_col} u pivot_cols.
std::vector<Rat> kernel_vector(const Rref& r, long free_col);

// Full kernel basis (one vector per free column). M * v = 0 exactly for each.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

}  // namespace planebranch
