#include <catch2/catch_amalgamated.hpp>

#include "spinacc/fp_matrix.hpp"
#include "spinacc/matrix.hpp"

using namespace spinacc;

namespace {

Mat<CycNum> rotation2(long M, long num, long den) {
  auto [c, s] = cos_sin(M, num, den);
  Mat<CycNum> m(2, 2);
  m.at(0, 0) = c;
  m.at(0, 1) = CycNum(0) - s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

}  // namespace

TEST_CASE("exact rotation matrices compose and have unit determinant") {
  Mat<CycNum> r = rotation2(8, 1, 8);
  Mat<CycNum> acc = Mat<CycNum>::eye(2);
  for (int k = 0; k < 8; ++k) acc = acc * r;
  CHECK(acc == Mat<CycNum>::eye(2));
  CHECK(det_bareiss(r) == CycNum(1));
}

TEST_CASE("Bareiss determinant matches cofactor values") {
  Mat<Rat> m(3, 3);
  int vals[3][3] = {{2, 0, 1}, {1, 3, -1}, {0, 5, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(vals[i][j]);
  // det = 2*(12+5) - 0 + 1*(5-0) = 39
  CHECK(det_bareiss(m) == Rat(39));

  Mat<Rat> sing(2, 2);
  sing.at(0, 0) = Rat(1);
  sing.at(0, 1) = Rat(2);
  sing.at(1, 0) = Rat(2);
  sing.at(1, 1) = Rat(4);
  CHECK(det_bareiss(sing) == Rat(0));
}

TEST_CASE("charpoly via Faddeev-LeVerrier annihilates the matrix") {
  Mat<Rat> m(3, 3);
  int vals[3][3] = {{0, 1, 0}, {0, 0, 1}, {6, -11, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(vals[i][j]);
  auto c = charpoly_fl(m);
  REQUIRE(c.size() == 4);
  // companion matrix of x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
  CHECK(c[3] == Rat(1));
  CHECK(c[2] == Rat(-6));
  CHECK(c[1] == Rat(11));
  CHECK(c[0] == Rat(-6));
  CHECK(eval_poly(c, Rat(1)) == Rat(0));
  CHECK(eval_poly(c, Rat(2)) == Rat(0));
  CHECK(eval_poly(c, Rat(3)) == Rat(0));
  CHECK(eval_poly(c, Rat(4)) != Rat(0));
  // constant term is (-1)^n det
  CHECK(c[0] == Rat(-1) * det_bareiss(m) * Rat(-1) * Rat(-1));
}

TEST_CASE("charpoly of an exact rotation has cyclotomic roots") {
  Mat<CycNum> r = rotation2(8, 1, 8);
  auto c = charpoly_fl(r);
  CycNum z = root_of_unity(8, 1);
  CHECK(eval_poly(c, z) == CycNum(0));
  CHECK(eval_poly(c, cyc_conj(z)) == CycNum(0));
  CHECK(eval_poly(c, CycNum(1)) != CycNum(0));
}

TEST_CASE("kernel basis spans the exact nullspace") {
  Mat<Rat> m(2, 4);
  int vals[2][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = Rat(vals[i][j]);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 3);
  for (const auto& v : basis) {
    Rat dot0(0);
    for (int j = 0; j < 4; ++j) dot0 += m.at(0, j) * v[j];
    CHECK(dot0 == 0);
  }
  CHECK(rank(m) == 1);
}

TEST_CASE("Fp matrices mirror exact computations through reduction") {
  std::uint64_t p = next_prime_1_mod(8, 100);
  FpCycMap f(8, p);
  Mat<CycNum> r = rotation2(8, 1, 8);
  FpMat fr = fp_reduce(r, f);
  FpMat acc = FpMat::eye(p, 2);
  for (int k = 0; k < 8; ++k) acc = acc * fr;
  CHECK(acc == FpMat::eye(p, 2));
  CHECK(fp_det(fr) == 1);
  CHECK(fp_reduce(r * r, f) == fr * fr);
}

TEST_CASE("fp_solve and fp_kernel_basis are consistent") {
  std::uint64_t p = 101;
  FpMat m(p, 2, 3);
  std::uint64_t vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  auto basis = fp_kernel_basis(m);
  REQUIRE(basis.size() == 1);
  for (int i = 0; i < 2; ++i) {
    std::uint64_t dot = 0;
    for (int j = 0; j < 3; ++j) dot = fp_add(dot, fp_mul(m.at(i, j), basis[0][j], p), p);
    CHECK(dot == 0);
  }
  std::vector<std::uint64_t> b = {6, 15}, x;
  REQUIRE(fp_solve(m, b, x));
  for (int i = 0; i < 2; ++i) {
    std::uint64_t dot = 0;
    for (int j = 0; j < 3; ++j) dot = fp_add(dot, fp_mul(m.at(i, j), x[j], p), p);
    CHECK(dot == b[i]);
  }
}

TEST_CASE("hash fingerprints distinguish nearby matrices") {
  std::uint64_t p = 101;
  FpMat a = FpMat::eye(p, 3), b = FpMat::eye(p, 3);
  b.at(2, 2) = 2;
  CHECK(fp_hash(a) != fp_hash(b));
  CHECK(fp_hash(a) == fp_hash(FpMat::eye(p, 3)));
}
