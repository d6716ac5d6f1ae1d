#pragma once

#include <bit>
#include <map>
#include <vector>

#include "spinacc/matrix.hpp"

namespace spinacc {

// Element of the Clifford algebra C(R^n) with e_i^2 = +1, stored sparsely as
// a map from basis-blade bitmask to coefficient. Basis blades are ordered
// products e_{i1}...e_{ik} with i1 < ... < ik encoded as set bits.
struct Clif {
  long n = 0;
  std::map<unsigned, CycNum> terms;

  Clif() = default;
  explicit Clif(long n_) : n(n_) {}

  static Clif scalar(long n, const CycNum& c) {
    Clif x(n);
    if (!spinacc::is_zero(c)) x.terms[0u] = c;
    return x;
  }
  static Clif one(long n) { return scalar(n, CycNum(1)); }

  static Clif vector(const std::vector<CycNum>& coords) {
    Clif x(static_cast<long>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!spinacc::is_zero(coords[i])) x.terms[1u << i] = coords[i];
    return x;
  }

  static Clif basis_vector(long n, long i) {
    Clif x(n);
    x.terms[1u << i] = CycNum(1);
    return x;
  }

  bool is_zero() const { return terms.empty(); }

  CycNum coeff(unsigned mask) const {
    auto it = terms.find(mask);
    return it == terms.end() ? CycNum(0) : it->second;
  }

  // Parity of a homogeneous element: 0 even, 1 odd, -1 mixed.
  int parity() const {
    int par = -2;
    for (const auto& [mask, c] : terms) {
      int p = std::popcount(mask) & 1;
      if (par == -2)
        par = p;
      else if (par != p)
        return -1;
    }
    return par == -2 ? 0 : par;
  }

  bool operator==(const Clif& o) const { return n == o.n && terms == o.terms; }
};

namespace detail {
// Sign of e_A * e_B relative to the canonical blade e_{A xor B}.
inline int blade_sign(unsigned A, unsigned B) {
  int swaps = 0;
  for (unsigned i = 0; B >> i; ++i) {
    if (!(B & (1u << i))) continue;
    swaps += std::popcount(A >> (i + 1));
  }
  return (swaps & 1) ? -1 : 1;
}
}  // namespace detail

inline Clif operator+(const Clif& x, const Clif& y) {
  Clif z = x;
  for (const auto& [mask, c] : y.terms) {
    auto it = z.terms.find(mask);
    if (it == z.terms.end()) {
      z.terms[mask] = c;
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) z.terms.erase(it);
    }
  }
  return z;
}

inline Clif operator-(const Clif& x) {
  Clif z = x;
  for (auto& [mask, c] : z.terms) c = CycNum(0) - c;
  return z;
}

inline Clif operator-(const Clif& x, const Clif& y) { return x + (-y); }

inline Clif operator*(const Clif& x, const Clif& y) {
  Clif z(x.n);
  for (const auto& [ma, ca] : x.terms) {
    for (const auto& [mb, cb] : y.terms) {
      CycNum c = ca * cb;
      if (detail::blade_sign(ma, mb) < 0) c = CycNum(0) - c;
      unsigned m = ma ^ mb;
      auto it = z.terms.find(m);
      if (it == z.terms.end()) {
        if (!is_zero(c)) z.terms[m] = c;
      } else {
        it->second = it->second + c;
        if (is_zero(it->second)) z.terms.erase(it);
      }
    }
  }
  return z;
}

inline Clif operator*(const CycNum& c, const Clif& x) {
  Clif z = x;
  for (auto& [mask, v] : z.terms) v = c * v;
  if (is_zero(c)) z.terms.clear();
  return z;
}

// Coefficient of a single blade in the product x*y, without forming the
// whole product. Sums over the blades of x paired with their complements.
inline CycNum product_blade_coeff(const Clif& x, const Clif& y, unsigned blade) {
  CycNum acc(0);
  for (const auto& [ma, ca] : x.terms) {
    unsigned mb = ma ^ blade;
    auto it = y.terms.find(mb);
    if (it == y.terms.end()) continue;
    CycNum c = ca * it->second;
    if (detail::blade_sign(ma, mb) < 0) c = CycNum(0) - c;
    acc = acc + c;
  }
  return acc;
}

// Reversal anti-automorphism: e_{i1}..e_{ik} -> e_{ik}..e_{i1}.
inline Clif reversal(const Clif& x) {
  Clif z = x;
  for (auto& [mask, c] : z.terms) {
    int k = std::popcount(mask);
    if (((k * (k - 1)) / 2) & 1) c = CycNum(0) - c;
  }
  return z;
}

// Grade involution: -1 on odd blades.
inline Clif grade_involution(const Clif& x) {
  Clif z = x;
  for (auto& [mask, c] : z.terms) {
    if (std::popcount(mask) & 1) c = CycNum(0) - c;
  }
  return z;
}

// Inverse of a Pin-group element: x * reversal(x) is a nonzero scalar.
inline Clif pin_inverse(const Clif& x) {
  Clif xr = reversal(x);
  Clif s = x * xr;
  if (s.terms.size() != 1 || s.terms.begin()->first != 0u)
    throw std::logic_error("pin_inverse: element is not in the Pin group");
  return cyc_inv(s.terms.begin()->second) * xr;
}

// Twisted conjugation v -> (-1)^{deg x} x v x^{-1}, as a matrix on R^n.
// Defined for homogeneous invertible x; lands in O(n) for Pin elements.
inline Mat<CycNum> pi_action(const Clif& x) {
  int par = x.parity();
  if (par < 0) throw std::logic_error("pi_action needs a homogeneous element");
  Clif xinv = pin_inverse(x);
  long n = x.n;
  Mat<CycNum> m(n, n);
  for (long i = 0; i < n; ++i) {
    Clif w = x * Clif::basis_vector(n, i) * xinv;
    if (par == 1) w = -w;
    for (const auto& [mask, c] : w.terms) {
      if (std::popcount(mask) != 1) throw std::logic_error("pi_action image is not a vector");
      m.at(static_cast<long>(std::countr_zero(mask)), i) = c;
    }
  }
  return m;
}

// Product e_a e_{a+1} ... e_{n-1}: the volume element of the block B in the
// orthogonal split R^n = A + B with A the first a coordinates.
inline Clif z_B(long n, long a) {
  Clif z = Clif::one(n);
  for (long i = a; i < n; ++i) z = z * Clif::basis_vector(n, i);
  return z;
}

// det of the B-block of pi(g) for g in Spin(A,B); equals det of the A-block.
inline CycNum kappa(const Clif& g, long a) {
  Mat<CycNum> m = pi_action(g);
  long n = g.n;
  long b = n - a;
  Mat<CycNum> blk(b, b);
  for (long i = 0; i < b; ++i)
    for (long j = 0; j < b; ++j) blk.at(i, j) = m.at(a + i, a + j);
  return det_bareiss(blk);
}

// Rotor for the rotation by angle 2*pi*num/den in the (i,j) coordinate plane,
// sending e_i -> cos t e_i + sin t e_j. Requires 2*den | M and 4 | M.
inline Clif plane_rotor(long n, long i, long j, long M, long num, long den) {
  auto [c, s] = cos_sin(M, num, 2 * den);  // half angle
  Clif r = Clif::scalar(n, c);
  Clif eji = Clif::basis_vector(n, j) * Clif::basis_vector(n, i);
  return r + s * eji;
}

// Unit vector (e_i - e_j)/sqrt(2); its reflection swaps e_i and e_j. Needs 8 | M.
inline Clif swap_unit(long n, long i, long j, long M) {
  CycNum z = root_of_unity(M, M / 8);
  CycNum inv_sqrt2 = cyc_inv(z + cyc_conj(z));  // 1/sqrt(2)
  Clif v(n);
  v.terms[1u << i] = inv_sqrt2;
  v.terms[1u << j] = CycNum(0) - inv_sqrt2;
  return v;
}

}  // namespace spinacc
