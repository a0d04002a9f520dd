#include "planebranch/matrix.hpp"

#include <algorithm>

#include "planebranch/errors.hpp"

namespace planebranch {

IntMat IntMat::identity(long n) {
  IntMat m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw MathError("matrix product: shape mismatch");
  IntMat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
  return r;
}

IntMat IntMat::transposed() const {
  IntMat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& v) const {
  if (static_cast<long>(v.size()) != cols_)
    throw MathError("matrix-vector product: shape mismatch");
  std::vector<Int> r(rows_, Int(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMat inverse_unitriangular(const IntMat& u) {
  const long n = u.rows();
  if (u.cols() != n) throw MathError("inverse: matrix is not square");
  for (long i = 0; i < n; ++i) {
    if (u.at(i, i) != 1) throw MathError("inverse: diagonal is not all ones");
    for (long j = 0; j < i; ++j)
      if (u.at(i, j) != 0) throw MathError("inverse: matrix is not upper-triangular");
  }
  IntMat inv = IntMat::identity(n);
  // Rows bottom-up: inv[i][j] = delta_ij - sum_{k>i} u[i][k] * inv[k][j].
  for (long i = n - 2; i >= 0; --i)
    for (long j = i + 1; j < n; ++j) {
      Int acc(0);
      for (long k = i + 1; k <= j; ++k) acc += u.at(i, k) * inv.at(k, j);
      inv.at(i, j) = -acc;
    }
  return inv;
}

std::vector<Rat> RatMat::mul_vec(const std::vector<Rat>& v) const {
  if (static_cast<long>(v.size()) != cols_)
    throw MathError("matrix-vector product: shape mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!is_zero(at(i, j)) && !is_zero(v[j])) r[i] += at(i, j) * v[j];
  return r;
}

Rref rref(RatMat m) {
  Rref out;
  const long rows = m.rows(), cols = m.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (!is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (long j = c; j < cols; ++j)
      if (!is_zero(m.at(r, j))) m.at(r, j) *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      Rat f = m.at(i, c);
      for (long j = c; j < cols; ++j)
        if (!is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  for (long c = 0, k = 0; c < cols; ++c) {
    if (k < static_cast<long>(out.pivot_cols.size()) && out.pivot_cols[k] == c)
      ++k;
    else
      out.free_cols.push_back(c);
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Rat> kernel_vector(const Rref& r, long free_col) {
  std::vector<Rat> v(r.reduced.cols(), Rat(0));
  v[free_col] = Rat(1);
  for (long i = 0; i < r.rank; ++i) {
    const Rat& c = r.reduced.at(i, free_col);
    if (!is_zero(c)) v[r.pivot_cols[i]] = -c;
  }
  return v;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  Rref r = rref(m);
  std::vector<std::vector<Rat>> basis;
  basis.reserve(r.free_cols.size());
  for (long c : r.free_cols) basis.push_back(kernel_vector(r, c));
  return basis;
}

}  // namespace planebranch
