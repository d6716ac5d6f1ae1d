#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spinacc/clifford.hpp"
#include "spinacc/spin_rep.hpp"

using namespace spinacc;

namespace {

// Random element of Spin(A,B): a product of vector pairs, each pair drawn
// from one block. Vectors are exact unit vectors: coordinate basis vectors,
// swap units (e_i - e_j)/sqrt(2), or rotor-style cos/sin combinations.
Clif random_spin_element(long n, long a, std::mt19937_64& rng, long M = 24) {
  auto unit_in = [&](long lo, long hi) -> Clif {
    long span = hi - lo;
    int kind = static_cast<int>(rng() % 3);
    if (span < 2) kind = 0;
    if (kind == 0) {
      return Clif::basis_vector(n, lo + static_cast<long>(rng() % span));
    }
    long i = lo + static_cast<long>(rng() % span);
    long j = lo + static_cast<long>(rng() % span);
    while (j == i) j = lo + static_cast<long>(rng() % span);
    if (kind == 1) return swap_unit(n, i, j, M);
    // cos t e_i + sin t e_j for a random angle t = 2 pi k / 12
    auto [c, s] = cos_sin(M, static_cast<long>(rng() % 12), 12);
    Clif v(n);
    v.terms.clear();
    if (!is_zero(c)) v.terms[1u << i] = c;
    if (!is_zero(s)) v.terms[1u << j] = s;
    return v;
  };
  Clif g = Clif::one(n);
  long pairs = 1 + static_cast<long>(rng() % 3);
  for (long t = 0; t < pairs; ++t) {
    bool in_a = (rng() % 2 == 0) && a >= 1;
    long lo = in_a ? 0 : a, hi = in_a ? a : n;
    if (hi - lo < 1) { lo = a; hi = n; }
    // a pair of vectors from the same block keeps the element in Spin(A,B)
    g = g * unit_in(lo, hi) * unit_in(lo, hi);
  }
  return g;
}

}  // namespace

TEST_CASE("geometric product basics") {
  long n = 3;
  Clif e0 = Clif::basis_vector(n, 0), e1 = Clif::basis_vector(n, 1);
  CHECK(e0 * e0 == Clif::one(n));
  CHECK(e0 * e1 == -(e1 * e0));
  Clif e01 = e0 * e1;
  CHECK(e01 * e01 == -Clif::one(n));
  CHECK(reversal(e01) == -e01);
  CHECK(grade_involution(e01) == e01);
  CHECK(grade_involution(e0) == -e0);
}

TEST_CASE("pi of a unit vector is the hyperplane reflection negating it") {
  long n = 3;
  Clif e0 = Clif::basis_vector(n, 0);
  Mat<CycNum> m = pi_action(e0);
  CHECK(m.at(0, 0) == CycNum(-1));
  CHECK(m.at(1, 1) == CycNum(1));
  CHECK(m.at(2, 2) == CycNum(1));
  CHECK(det_bareiss(m) == CycNum(-1));  // det o pi = (-1)^deg
}

TEST_CASE("plane rotor projects onto the expected rotation") {
  long n = 3, M = 24;
  Clif r = plane_rotor(n, 0, 1, M, 1, 6);  // rotation by pi/3 in (0,1)
  Mat<CycNum> m = pi_action(r);
  auto [c, s] = cos_sin(M, 1, 6);
  CHECK(m.at(0, 0) == c);
  CHECK(m.at(1, 0) == s);
  CHECK(m.at(0, 1) == CycNum(0) - s);
  CHECK(m.at(2, 2) == CycNum(1));
  CHECK(det_bareiss(m) == CycNum(1));
}

TEST_CASE("swap unit vector projects onto a transposition") {
  long n = 4, M = 8;
  Clif v = swap_unit(n, 1, 3, M);
  CHECK(v * v == Clif::one(n));
  Mat<CycNum> m = pi_action(v);
  CHECK(m.at(3, 1) == CycNum(1));
  CHECK(m.at(1, 3) == CycNum(1));
  CHECK(m.at(0, 0) == CycNum(1));
  CHECK(m.at(2, 2) == CycNum(1));
  CHECK(m.at(1, 1) == CycNum(0));
}

TEST_CASE("kernel of pi is plus-minus one") {
  long n = 3, M = 24;
  // the rotor at full angle 2*pi is -1, at angle 0 is +1
  Clif full = plane_rotor(n, 0, 1, M, 6, 6);
  CHECK(full == -Clif::one(n));
  CHECK(pi_action(full) == Mat<CycNum>::eye(n));
  Clif half = plane_rotor(n, 0, 1, M, 3, 6);  // rotation by pi
  Mat<CycNum> m = pi_action(half);
  CHECK(m.at(0, 0) == CycNum(-1));
  CHECK(m.at(1, 1) == CycNum(-1));
  CHECK(m.at(2, 2) == CycNum(1));
}

TEST_CASE("z_B squares to the signed identity and kappa detects mixed parity") {
  // n = 7, a = 1: B has dimension 6, z_B^2 = (-1)^{6/2 mod 2} = -1
  Clif z16 = z_B(7, 1);
  CHECK(z16 * z16 == -Clif::one(7));
  // n = 7, a = 3: b = 4, z_B^2 = +1
  Clif z34 = z_B(7, 3);
  CHECK(z34 * z34 == Clif::one(7));
  // pi(z_B) = (id_A, -id_B)
  Mat<CycNum> m = pi_action(z34);
  for (long i = 0; i < 3; ++i) CHECK(m.at(i, i) == CycNum(1));
  for (long i = 3; i < 7; ++i) CHECK(m.at(i, i) == CycNum(-1));
  // e*f for e in A, f in B: kappa = -1 and (ef)^2 = -1
  Clif ef = Clif::basis_vector(7, 0) * Clif::basis_vector(7, 3);
  CHECK(ef * ef == -Clif::one(7));
  CHECK(kappa(ef, 3) == CycNum(-1));
}

TEST_CASE("conjugation by z_B scales by kappa across randomized Spin(A,B) elements") {
  // the identity z_B g z_B^{-1} = kappa(g) g over splits 7 = 1+6, 3+4, 5+2
  std::mt19937_64 rng(20240817);
  int total = 0;
  for (long a : {1L, 3L, 5L}) {
    Clif z = z_B(7, a);
    Clif zinv = pin_inverse(z);
    for (int trial = 0; trial < 40; ++trial) {
      Clif g = random_spin_element(7, a, rng);
      CycNum k = kappa(g, a);
      REQUIRE((k == CycNum(1) || k == CycNum(-1)));
      Clif lhs = z * g * zinv;
      Clif rhs = k * g;
      CHECK(lhs == rhs);
      ++total;
    }
  }
  CHECK(total >= 100);
}

TEST_CASE("gamma matrices satisfy the Clifford relations") {
  SpinRep S(7);
  CHECK(S.dim() == 8);
  for (long i = 0; i < 7; ++i) {
    for (long j = 0; j <= i; ++j) {
      Mat<CycNum> anti = S.gamma(i) * S.gamma(j) + S.gamma(j) * S.gamma(i);
      Mat<CycNum> expect(8, 8);
      if (i == j) expect = scale(CycNum(2), Mat<CycNum>::eye(8));
      CHECK(anti == expect);
    }
  }
}

TEST_CASE("spin representation is multiplicative and has trace 2^k at 1") {
  SpinRep S(7);
  CHECK(S.character(Clif::one(7)) == CycNum(8));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 8; ++t) {
    Clif g = random_spin_element(7, 3, rng);
    Clif h = random_spin_element(7, 3, rng);
    CHECK(S.matrix(g * h) == S.matrix(g) * S.matrix(h));
  }
  // -1 in Spin maps to -Id, distinguishing the two lifts
  CHECK(S.matrix(-Clif::one(7)) == scale(CycNum(-1), Mat<CycNum>::eye(8)));
}

TEST_CASE("a rotation by pi has a traceless lift exactly when trace vanishes on the spinor side") {
  SpinRep S(7);
  long M = 24;
  // g with eigenvalue -1 on E (rotation by pi in a plane): gamma ~ -gamma
  Clif g = plane_rotor(7, 0, 1, M, 3, 6);
  CHECK(S.character(g) == CycNum(0));
  // g without eigenvalue -1: rotation by 2pi/3
  Clif h = plane_rotor(7, 0, 1, M, 2, 6);
  CHECK(S.character(h) != CycNum(0));
}
