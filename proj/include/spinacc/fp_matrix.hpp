#pragma once

#include <cstdint>
#include <vector>

#include "spinacc/cyclotomic.hpp"
#include "spinacc/matrix.hpp"
#include "spinacc/prime_field.hpp"

namespace spinacc {

// Dense matrix over F_p. The modulus travels with the matrix; mixed-modulus
// arithmetic is a logic error.
struct FpMat {
  std::uint64_t p = 0;
  long rows = 0, cols = 0;
  std::vector<std::uint64_t> a;

  FpMat() = default;
  FpMat(std::uint64_t p_, long r, long c) : p(p_), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint64_t& at(long i, long j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::uint64_t at(long i, long j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static FpMat eye(std::uint64_t p, long n) {
    FpMat m(p, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const FpMat& o) const { return p == o.p && rows == o.rows && cols == o.cols && a == o.a; }
};

inline FpMat operator*(const FpMat& x, const FpMat& y) {
  if (x.p != y.p || x.cols != y.rows) throw std::logic_error("FpMat product mismatch");
  FpMat z(x.p, x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i) {
    for (long k = 0; k < x.cols; ++k) {
      std::uint64_t v = x.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j) {
        std::uint64_t w = y.at(k, j);
        if (w == 0) continue;
        z.at(i, j) = fp_add(z.at(i, j), fp_mul(v, w, x.p), x.p);
      }
    }
  }
  return z;
}

inline FpMat operator+(const FpMat& x, const FpMat& y) {
  FpMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = fp_add(z.a[i], y.a[i], z.p);
  return z;
}

inline FpMat operator-(const FpMat& x, const FpMat& y) {
  FpMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = fp_sub(z.a[i], y.a[i], z.p);
  return z;
}

inline FpMat fp_scale(std::uint64_t c, const FpMat& x) {
  FpMat z = x;
  for (auto& v : z.a) v = fp_mul(c, v, z.p);
  return z;
}

inline FpMat fp_transpose(const FpMat& x) {
  FpMat z(x.p, x.cols, x.rows);
  for (long i = 0; i < x.rows; ++i)
    for (long j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

inline std::uint64_t fp_trace(const FpMat& x) {
  std::uint64_t s = 0;
  for (long i = 0; i < x.rows; ++i) s = fp_add(s, x.at(i, i), x.p);
  return s;
}

// Image of an exact matrix under a cyclotomic reduction map.
inline FpMat fp_reduce(const Mat<CycNum>& m, const FpCycMap& f) {
  FpMat z(f.p(), m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) z.at(i, j) = f(m.at(i, j));
  return z;
}

// Gauss-Jordan reduction in place; returns pivot columns.
inline std::vector<long> fp_row_reduce(FpMat& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long j = 0; j < m.cols && r < m.rows; ++j) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i)
      if (m.at(i, j) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (long k = 0; k < m.cols; ++k) std::swap(m.at(r, k), m.at(piv, k));
    std::uint64_t inv = fp_inv(m.at(r, j), m.p);
    for (long k = j; k < m.cols; ++k) m.at(r, k) = fp_mul(m.at(r, k), inv, m.p);
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, j) == 0) continue;
      std::uint64_t f = m.at(i, j);
      for (long k = j; k < m.cols; ++k) m.at(i, k) = fp_sub(m.at(i, k), fp_mul(f, m.at(r, k), m.p), m.p);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

inline long fp_rank(FpMat m) { return static_cast<long>(fp_row_reduce(m).size()); }

inline std::vector<std::vector<std::uint64_t>> fp_kernel_basis(FpMat m) {
  long n = m.cols;
  std::vector<long> pivots = fp_row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (long j : pivots) is_pivot[j] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (long j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[j] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fp_neg(m.at(static_cast<long>(r), j), m.p);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::uint64_t fp_det(FpMat m) {
  if (m.rows != m.cols) throw std::logic_error("fp_det of non-square matrix");
  std::uint64_t det = 1;
  long n = m.rows;
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (m.at(i, k) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      det = fp_neg(det, m.p);
    }
    det = fp_mul(det, m.at(k, k), m.p);
    std::uint64_t inv = fp_inv(m.at(k, k), m.p);
    for (long i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      std::uint64_t f = fp_mul(m.at(i, k), inv, m.p);
      for (long j = k; j < n; ++j) m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(k, j), m.p), m.p);
    }
  }
  return det;
}

// Solve m x = b; returns false when inconsistent. Solution uses free vars = 0.
inline bool fp_solve(FpMat m, std::vector<std::uint64_t> b, std::vector<std::uint64_t>& x) {
  FpMat aug(m.p, m.rows, m.cols + 1);
  for (long i = 0; i < m.rows; ++i) {
    for (long j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<long> pivots = fp_row_reduce(aug);
  x.assign(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols) return false;
    x[pivots[r]] = aug.at(static_cast<long>(r), m.cols);
  }
  return true;
}

// FNV-1a over the entries; used as a closure fingerprint hash.
inline std::uint64_t fp_hash(const FpMat& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t v : m.a) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace spinacc
