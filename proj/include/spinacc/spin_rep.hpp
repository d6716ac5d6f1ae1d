#pragma once

#include <map>
#include <vector>

#include "spinacc/clifford.hpp"
#include "spinacc/matrix.hpp"

namespace spinacc {

// The 2^k-dimensional complex representation of C(R^n) for odd n = 2k+1,
// realized by Pauli tensor products:
//   gamma_1 = s1 x 1 x ... x 1,   gamma_2 = s2 x 1 x ... x 1,
//   gamma_3 = s3 x s1 x ... x 1,  gamma_4 = s3 x s2 x 1 x ...,
//   ...,                          gamma_n = s3 x s3 x ... x s3.
// Restricting to the even part gives the spin representation; S(1) = Id, so
// the character of the identity is +2^k.
class SpinRep {
 public:
  explicit SpinRep(long n) : n_(n), k_((n - 1) / 2), dim_(1L << k_) {
    if (n % 2 != 1 || n < 1) throw std::logic_error("SpinRep needs odd n");
    CycNum i = root_of_unity(4, 1);
    Mat<CycNum> s1(2, 2), s2(2, 2), s3(2, 2);
    s1.at(0, 1) = CycNum(1);
    s1.at(1, 0) = CycNum(1);
    s2.at(0, 1) = CycNum(0) - i;
    s2.at(1, 0) = i;
    s3.at(0, 0) = CycNum(1);
    s3.at(1, 1) = CycNum(-1);
    gamma_.reserve(n);
    for (long j = 0; j < n; ++j) {
      Mat<CycNum> g(1, 1);
      g.at(0, 0) = CycNum(1);
      long lead = j / 2;  // leading s3 factors; j = n-1 gets all s3
      for (long t = 0; t < k_; ++t) {
        if (t < lead)
          g = kron(g, s3);
        else if (t == lead)
          g = kron(g, (j % 2 == 0) ? s1 : s2);
        else
          g = kron(g, Mat<CycNum>::eye(2));
      }
      gamma_.push_back(std::move(g));
    }
  }

  long n() const { return n_; }
  long dim() const { return dim_; }
  const Mat<CycNum>& gamma(long j) const { return gamma_[j]; }

  // Shared instance per dimension; the gamma matrices are immutable.
  static const SpinRep& get(long n) {
    static std::map<long, SpinRep> registry;
    auto it = registry.find(n);
    if (it == registry.end()) it = registry.emplace(n, SpinRep(n)).first;
    return it->second;
  }

  // Image of a Clifford element: sum of coefficients times blade products.
  Mat<CycNum> matrix(const Clif& x) const {
    if (x.n != n_) throw std::logic_error("SpinRep dimension mismatch");
    Mat<CycNum> acc(dim_, dim_);
    for (const auto& [mask, c] : x.terms) {
      Mat<CycNum> blade = Mat<CycNum>::eye(dim_);
      for (long j = 0; j < n_; ++j)
        if (mask & (1u << j)) blade = blade * gamma_[j];
      acc = acc + scale(c, blade);
    }
    return acc;
  }

  CycNum character(const Clif& x) const { return trace(matrix(x)); }

 private:
  static Mat<CycNum> kron(const Mat<CycNum>& a, const Mat<CycNum>& b) {
    Mat<CycNum> z(a.rows * b.rows, a.cols * b.cols);
    for (long i = 0; i < a.rows; ++i)
      for (long j = 0; j < a.cols; ++j) {
        if (is_zero(a.at(i, j))) continue;
        for (long r = 0; r < b.rows; ++r)
          for (long s = 0; s < b.cols; ++s)
            z.at(i * b.rows + r, j * b.cols + s) = a.at(i, j) * b.at(r, s);
      }
    return z;
  }

  long n_, k_, dim_;
  std::vector<Mat<CycNum>> gamma_;
};

}  // namespace spinacc
