#include <catch2/catch_amalgamated.hpp>

#include "spinacc/cyclotomic.hpp"

using namespace spinacc;

TEST_CASE("cyclotomic polynomial degrees and small cases") {
  CHECK(CycCtx::get(4).deg == 2);
  CHECK(CycCtx::get(8).deg == 4);
  CHECK(CycCtx::get(24).deg == 8);
  CHECK(CycCtx::get(40).deg == 16);

  // Phi_4 = x^2 + 1
  const auto& c4 = CycCtx::get(4);
  REQUIRE(c4.phi.size() == 3);
  CHECK(c4.phi[0] == 1);
  CHECK(c4.phi[1] == 0);
  CHECK(c4.phi[2] == 1);

  // Phi_8 = x^4 + 1
  const auto& c8 = CycCtx::get(8);
  REQUIRE(c8.phi.size() == 5);
  CHECK(c8.phi[0] == 1);
  CHECK(c8.phi[4] == 1);
  for (int i = 1; i < 4; ++i) CHECK(c8.phi[i] == 0);

  // Phi_12 = x^4 - x^2 + 1
  const auto& c12 = CycCtx::get(12);
  REQUIRE(c12.phi.size() == 5);
  CHECK(c12.phi[0] == 1);
  CHECK(c12.phi[2] == -1);
  CHECK(c12.phi[4] == 1);
}

TEST_CASE("roots of unity have the right multiplicative order") {
  for (long M : {4L, 8L, 12L, 20L, 24L, 40L}) {
    CycNum z = root_of_unity(M, 1);
    CycNum acc = z;
    for (long k = 2; k <= M; ++k) {
      acc = acc * z;
      if (k < M) CHECK(acc != CycNum(1));
    }
    CHECK(acc == CycNum(1));
  }
}

TEST_CASE("conjugation and inverse agree on roots of unity") {
  for (long M : {8L, 24L}) {
    for (long k = 1; k < M; ++k) {
      CycNum z = root_of_unity(M, k);
      CHECK(cyc_conj(z) == root_of_unity(M, M - k));
      CHECK(z * cyc_inv(z) == CycNum(1));
      CHECK(cyc_conj(z) * z == CycNum(1));
    }
  }
}

TEST_CASE("field arithmetic identities in Q(zeta_8)") {
  CycNum z = root_of_unity(8, 1);
  CycNum i = root_of_unity(8, 2);
  CHECK(i * i == CycNum(-1));
  // zeta_8 + conj(zeta_8) = sqrt(2): square it.
  CycNum s = z + cyc_conj(z);
  CHECK(s * s == CycNum(2));
  // inverse of a generic element
  CycNum x = z + CycNum(3) * i - CycNum(Rat(1, 2));
  CHECK(x * cyc_inv(x) == CycNum(1));
}

TEST_CASE("embedding is a field map and preserves values") {
  CycNum i4 = root_of_unity(4, 1);
  CycNum i8 = root_of_unity(8, 2);
  CHECK(cyc_embed(i4, 8) == i8);
  CHECK(i4 == i8);  // promotion inside equality
  CycNum a = root_of_unity(8, 1) + CycNum(2);
  CycNum b = cyc_embed(a, 24);
  CHECK(b * b == cyc_embed(a * a, 24));
}

TEST_CASE("cos_sin returns exact half-angle pairs") {
  auto [c1, s1] = cos_sin(4, 1, 4);  // angle pi/2
  CHECK(c1 == CycNum(0));
  CHECK(s1 == CycNum(1));

  auto [c2, s2] = cos_sin(8, 1, 8);  // angle pi/4: cos = sin = sqrt(2)/2
  CHECK(c2 == s2);
  CHECK(c2 * c2 + s2 * s2 == CycNum(1));
  CHECK((c2 + s2) * (c2 + s2) == CycNum(1) + CycNum(2) * c2 * s2);

  auto [c3, s3] = cos_sin(24, 1, 6);  // angle pi/3
  CHECK(c3 == CycNum(Rat(1, 2)));
  CHECK(c3 * c3 + s3 * s3 == CycNum(1));

  auto [c4, s4] = cos_sin(4, 1, 2);  // angle pi
  CHECK(c4 == CycNum(-1));
  CHECK(s4 == CycNum(0));
}

TEST_CASE("rational detection and extraction") {
  CycNum z = root_of_unity(8, 1);
  CHECK(!z.is_rational());
  CycNum two = z * z * z * z + CycNum(3);  // zeta_8^4 = -1
  CHECK(two.is_rational());
  CHECK(two.to_rat() == 2);
}

TEST_CASE("reduction mod p at a primitive root is a ring map") {
  const std::uint64_t p = 13;  // 13 = 1 mod 4
  FpCycMap f(4, p);
  CycNum i = root_of_unity(4, 1);
  std::uint64_t fi = f(i);
  CHECK(fp_mul(fi, fi, p) == p - 1);  // i^2 = -1
  CycNum x = i + CycNum(2), y = CycNum(3) * i - CycNum(1);
  CHECK(f(x * y) == fp_mul(f(x), f(y), p));
  CHECK(f(x + y) == fp_add(f(x), f(y), p));

  // denominator divisible by p must throw
  CycNum bad = CycNum(Rat(1, 13));
  CHECK_THROWS_AS(f(bad), denominator_divides_p);
}

TEST_CASE("prime search respects congruence and size constraints") {
  std::uint64_t p = next_prime_1_mod(8, 100);
  CHECK(p > 100);
  CHECK(p % 8 == 1);
  CHECK(is_prime_u64(p));
  std::uint64_t w = fp_root_of_unity(8, p);
  CHECK(fp_pow(w, 8, p) == 1);
  CHECK(fp_pow(w, 4, p) != 1);
}
