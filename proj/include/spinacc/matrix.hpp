#pragma once

#include <vector>

#include "spinacc/cyclotomic.hpp"

namespace spinacc {

// Dense matrix over an exact field T (Rat or CycNum). T must be constructible
// from int and support +, -, *, /, == plus a free is_zero overload.
template <class T>
struct Mat {
  long rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, T(0)) {}

  T& at(long i, long j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const T& at(long i, long j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat eye(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == o.a[i])) return false;
    return true;
  }
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw std::logic_error("matrix product shape mismatch");
  Mat<T> z(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i) {
    for (long k = 0; k < x.cols; ++k) {
      const T& v = x.at(i, k);
      if (is_zero(v)) continue;
      for (long j = 0; j < y.cols; ++j) {
        if (is_zero(y.at(k, j))) continue;
        z.at(i, j) = z.at(i, j) + v * y.at(k, j);
      }
    }
  }
  return z;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = z.a[i] + y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = z.a[i] - y.a[i];
  return z;
}

template <class T>
Mat<T> scale(const T& c, const Mat<T>& x) {
  Mat<T> z = x;
  for (auto& v : z.a) v = c * v;
  return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
  Mat<T> z(x.cols, x.rows);
  for (long i = 0; i < x.rows; ++i)
    for (long j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class T>
T trace(const Mat<T>& x) {
  T s(0);
  for (long i = 0; i < x.rows; ++i) s = s + x.at(i, i);
  return s;
}

// Fraction-free determinant (Bareiss). Intermediate divisions are exact.
template <class T>
T det_bareiss(Mat<T> m) {
  if (m.rows != m.cols) throw std::logic_error("determinant of non-square matrix");
  long n = m.rows;
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (is_zero(m.at(k, k))) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (!is_zero(m.at(i, k))) { piv = i; break; }
      if (piv < 0) return T(0);
      for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = T(0);
    }
    prev = m.at(k, k);
  }
  T d = m.at(n - 1, n - 1);
  return sign < 0 ? T(0) - d : d;
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence.
// Returns coefficients c[0..n] with p(x) = sum c[i] x^i and c[n] = 1.
template <class T>
std::vector<T> charpoly_fl(const Mat<T>& A) {
  if (A.rows != A.cols) throw std::logic_error("charpoly of non-square matrix");
  long n = A.rows;
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Mat<T> M = Mat<T>::eye(n);
  T ck = T(0) - trace(A);
  if (n >= 1) c[n - 1] = ck;
  for (long k = 2; k <= n; ++k) {
    Mat<T> AM = A * M;
    for (long i = 0; i < n; ++i) AM.at(i, i) = AM.at(i, i) + c[n - k + 1];
    M = AM;
    T t = trace(A * M);
    c[n - k] = (T(0) - t) / T(static_cast<int>(k));
  }
  return c;
}

template <class T>
T eval_poly(const std::vector<T>& c, const T& x) {
  T acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Row echelon reduction in place. Returns pivot column indices.
template <class T>
std::vector<long> row_reduce(Mat<T>& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long j = 0; j < m.cols && r < m.rows; ++j) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i)
      if (!is_zero(m.at(i, j))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (long k = 0; k < m.cols; ++k) std::swap(m.at(r, k), m.at(piv, k));
    T inv = T(1) / m.at(r, j);
    for (long k = j; k < m.cols; ++k) m.at(r, k) = m.at(r, k) * inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, j))) continue;
      T f = m.at(i, j);
      for (long k = j; k < m.cols; ++k) m.at(i, k) = m.at(i, k) - f * m.at(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

template <class T>
long rank(Mat<T> m) {
  return static_cast<long>(row_reduce(m).size());
}

// Basis of the right kernel {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m) {
  long n = m.cols;
  std::vector<long> pivots = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (long j : pivots) is_pivot[j] = true;
  std::vector<std::vector<T>> basis;
  for (long j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<T> v(n, T(0));
    v[j] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T(0) - m.at(static_cast<long>(r), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace spinacc
