#pragma once

#include <vector>

#include "spinacc/cyclotomic.hpp"
#include "spinacc/matrix.hpp"

namespace spinacc {

// Rotation by 2 pi num/den in the (i, j) coordinate plane, identity elsewhere.
// Sends e_i to cos e_i + sin e_j. Requires den | M and 4 | M.
inline Mat<CycNum> rotation_block(long n, long i, long j, long M, long num, long den) {
  auto [c, s] = cos_sin(M, num, den);
  Mat<CycNum> m = Mat<CycNum>::eye(n);
  m.at(i, i) = c;
  m.at(i, j) = CycNum(0) - s;
  m.at(j, i) = s;
  m.at(j, j) = c;
  return m;
}

inline Mat<CycNum> diag_signs(const std::vector<int>& signs) {
  long n = static_cast<long>(signs.size());
  Mat<CycNum> m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycNum(signs[static_cast<std::size_t>(i)]);
  return m;
}

// Signed permutation: column j carries sign[j] in row perm[j].
inline Mat<CycNum> signed_permutation(const std::vector<long>& perm, const std::vector<int>& sign) {
  long n = static_cast<long>(perm.size());
  Mat<CycNum> m(n, n);
  for (long j = 0; j < n; ++j) m.at(perm[static_cast<std::size_t>(j)], j) = CycNum(sign[static_cast<std::size_t>(j)]);
  return m;
}

inline Mat<CycNum> permutation_matrix(const std::vector<long>& perm) {
  return signed_permutation(perm, std::vector<int>(perm.size(), 1));
}

// Block-diagonal embedding of m into the top-left corner of an n x n identity.
inline Mat<CycNum> corner_embed(const Mat<CycNum>& m, long n) {
  Mat<CycNum> out = Mat<CycNum>::eye(n);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

}  // namespace spinacc
