#pragma once

#include <cstdint>
#include <vector>

#include "spinacc/error.hpp"
#include "spinacc/rational.hpp"

namespace spinacc {

// Arithmetic in F_p for p < 2^62, value-passing style. All inputs are assumed
// reduced to [0, p).

inline std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t fp_neg(std::uint64_t a, std::uint64_t p) { return a ? p - a : 0; }

inline std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::logic_error("fp_inv of zero");
  return fp_pow(a, p - 2, p);
}

// Image of an exact rational in F_p. Throws when p divides the denominator.
inline std::uint64_t fp_of_rat(const Rat& x, std::uint64_t p) {
  std::uint64_t den = mod_u64(rat_den(x), p);
  if (den == 0) throw denominator_divides_p("denominator divisible by working prime");
  return fp_mul(mod_u64(rat_num(x), p), fp_inv(den, p), p);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = fp_pow(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = fp_mul(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Least prime p > floor with p = 1 (mod m) and p coprime to avoid_factor.
inline std::uint64_t next_prime_1_mod(std::uint64_t m, std::uint64_t floor, std::uint64_t avoid_factor = 1) {
  std::uint64_t p = floor / m * m + 1;
  while (p <= floor) p += m;
  for (;; p += m) {
    if (!is_prime_u64(p)) continue;
    if (avoid_factor > 1 && avoid_factor % p == 0) continue;
    return p;
  }
}

// A generator of the cyclic group F_p^*, found by testing prime-order power maps.
inline std::uint64_t fp_primitive_root(std::uint64_t p) {
  std::uint64_t n = p - 1;
  std::vector<std::uint64_t> fac;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      fac.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) fac.push_back(m);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t q : fac) {
      if (fp_pow(g, n / q, p) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
}

// A primitive M-th root of unity in F_p. Requires p = 1 (mod M).
inline std::uint64_t fp_root_of_unity(std::uint64_t M, std::uint64_t p) {
  if ((p - 1) % M != 0) throw std::logic_error("p != 1 mod M");
  return fp_pow(fp_primitive_root(p), (p - 1) / M, p);
}

}  // namespace spinacc
