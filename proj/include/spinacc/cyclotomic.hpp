#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "spinacc/prime_field.hpp"
#include "spinacc/rational.hpp"

namespace spinacc {

namespace detail {

// Dense polynomials over Q, poly[i] = coefficient of x^i, trailing zeros trimmed.
using Poly = std::vector<Rat>;

inline void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, Rat(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  }
  poly_trim(h);
  return h;
}

// Euclidean division f = q*g + r with deg r < deg g.
inline std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g) {
  if (g.empty()) throw std::logic_error("poly division by zero");
  Poly q;
  if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, Rat(0));
  const Rat lead = g.back();
  while (f.size() >= g.size()) {
    Rat c = f.back() / lead;
    std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    poly_trim(f);
  }
  poly_trim(q);
  return {q, f};
}

// Extended gcd: returns (g, s, t) with s*f + t*h = g, g monic unless zero.
inline void poly_xgcd(Poly f, Poly h, Poly& g, Poly& s, Poly& t) {
  Poly s0 = {Rat(1)}, s1 = {}, t0 = {}, t1 = {Rat(1)};
  while (!h.empty()) {
    auto [q, r] = poly_divmod(f, h);
    Poly s2 = s0, t2 = t0;
    Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    t2.resize(std::max(t2.size(), qt.size()), Rat(0));
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    poly_trim(s2);
    poly_trim(t2);
    f = std::move(h);
    h = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!f.empty() && f.back() != 1) {
    Rat lead = f.back();
    for (auto& c : f) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
  }
  g = std::move(f);
  s = std::move(s0);
  t = std::move(t0);
}

}  // namespace detail

inline long euler_phi(long m) {
  long result = m, n = m;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      result -= result / q;
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Precomputed data for Q(zeta_M): the cyclotomic polynomial and the reduction
// of every power zeta^t onto the power basis 1, zeta, ..., zeta^(phi(M)-1).
class CycCtx {
 public:
  long M;
  long deg;
  detail::Poly phi;                          // Phi_M, monic of degree phi(M)
  std::vector<std::vector<Rat>> zpow;        // zpow[t], t in [0, max(M, 2 deg - 1))

  static const CycCtx& get(long M) {
    static std::map<long, CycCtx> registry;
    auto it = registry.find(M);
    if (it == registry.end()) it = registry.emplace(M, CycCtx(M)).first;
    return it->second;
  }

 private:
  explicit CycCtx(long m) : M(m), deg(euler_phi(m)) {
    phi = cyclotomic_poly(m);
    long count = std::max(M, 2 * deg - 1);
    zpow.resize(count);
    std::vector<Rat> cur(deg, Rat(0));
    cur[0] = 1;
    for (long t = 0; t < count; ++t) {
      zpow[t] = cur;
      // cur <- x * cur mod Phi
      Rat top = cur[deg - 1];
      for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (long i = 0; i < deg; ++i) cur[i] -= top * phi[i];
      }
    }
  }

  static detail::Poly cyclotomic_poly(long m) {
    // Phi_d for all d | m by dividing x^d - 1 through the earlier factors.
    std::vector<long> divs;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) divs.push_back(d);
    std::map<long, detail::Poly> table;
    for (long d : divs) {
      detail::Poly xd(d + 1, Rat(0));
      xd[0] = -1;
      xd[d] = 1;
      for (long e : divs) {
        if (e < d && d % e == 0) xd = detail::poly_divmod(xd, table[e]).first;
      }
      table[d] = xd;
    }
    return table[m];
  }
};

// Element of Q(zeta_M) in power-basis coordinates. M == 0 encodes a plain
// rational, which promotes silently into any cyclotomic field.
struct CycNum {
  long M = 0;
  std::vector<Rat> c{Rat(0)};

  CycNum() = default;
  CycNum(int v) : M(0), c{Rat(v)} {}  // NOLINT: implicit by design, mirrors field literals
  explicit CycNum(const Rat& v) : M(0), c{v} {}
  CycNum(long m, std::vector<Rat> coords) : M(m), c(std::move(coords)) {}

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  }
  Rat to_rat() const {
    if (!is_rational()) throw std::logic_error("cyclotomic value is not rational");
    return c[0];
  }
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x == 0; }

inline CycNum cyc_rat(const Rat& v) { return CycNum(v); }

inline CycNum root_of_unity(long M, long k) {
  const CycCtx& ctx = CycCtx::get(M);
  k %= M;
  if (k < 0) k += M;
  return CycNum(M, ctx.zpow[k]);
}

// zeta_{M1}^i -> zeta_{M2}^{i * M2/M1}; requires M1 | M2.
inline CycNum cyc_embed(const CycNum& x, long M2) {
  if (x.M == M2) return x;
  if (x.M == 0) {
    const CycCtx& ctx = CycCtx::get(M2);
    std::vector<Rat> c(ctx.deg, Rat(0));
    c[0] = x.c[0];
    return CycNum(M2, std::move(c));
  }
  if (M2 % x.M != 0) throw std::logic_error("cyclotomic embed needs divisible moduli");
  const CycCtx& ctx = CycCtx::get(M2);
  long k = M2 / x.M;
  std::vector<Rat> out(ctx.deg, Rat(0));
  for (long i = 0; i < static_cast<long>(x.c.size()); ++i) {
    if (x.c[i] == 0) continue;
    const auto& pw = ctx.zpow[(i * k) % M2];
    for (long j = 0; j < ctx.deg; ++j) out[j] += x.c[i] * pw[j];
  }
  return CycNum(M2, std::move(out));
}

namespace detail {
inline long promote(const CycNum& a, const CycNum& b) {
  if (a.M == b.M) return a.M;
  if (a.M == 0) return b.M;
  if (b.M == 0) return a.M;
  return std::lcm(a.M, b.M);
}
}  // namespace detail

inline CycNum operator+(const CycNum& a, const CycNum& b) {
  long M = detail::promote(a, b);
  if (M == 0) return CycNum(a.c[0] + b.c[0]);
  CycNum x = cyc_embed(a, M), y = cyc_embed(b, M);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
  return x;
}

inline CycNum operator-(const CycNum& a, const CycNum& b) {
  long M = detail::promote(a, b);
  if (M == 0) return CycNum(a.c[0] - b.c[0]);
  CycNum x = cyc_embed(a, M), y = cyc_embed(b, M);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
  return x;
}

inline CycNum operator-(const CycNum& a) {
  CycNum x = a;
  for (auto& v : x.c) v = -v;
  return x;
}

inline CycNum operator*(const CycNum& a, const CycNum& b) {
  long M = detail::promote(a, b);
  if (M == 0) return CycNum(a.c[0] * b.c[0]);
  CycNum x = cyc_embed(a, M), y = cyc_embed(b, M);
  const CycCtx& ctx = CycCtx::get(M);
  long deg = ctx.deg;
  std::vector<Rat> conv(2 * deg - 1, Rat(0));
  for (long i = 0; i < deg; ++i) {
    if (x.c[i] == 0) continue;
    for (long j = 0; j < deg; ++j) {
      if (y.c[j] == 0) continue;
      conv[i + j] += x.c[i] * y.c[j];
    }
  }
  std::vector<Rat> out(deg, Rat(0));
  for (long t = 0; t < 2 * deg - 1; ++t) {
    if (conv[t] == 0) continue;
    if (t < deg) {
      out[t] += conv[t];
    } else {
      const auto& pw = ctx.zpow[t];
      for (long j = 0; j < deg; ++j) out[j] += conv[t] * pw[j];
    }
  }
  return CycNum(M, std::move(out));
}

inline bool operator==(const CycNum& a, const CycNum& b) {
  long M = detail::promote(a, b);
  if (M == 0) return a.c[0] == b.c[0];
  return cyc_embed(a, M).c == cyc_embed(b, M).c;
}
inline bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

// Complex conjugation, zeta -> zeta^(M-1).
inline CycNum cyc_conj(const CycNum& x) {
  if (x.M == 0) return x;
  const CycCtx& ctx = CycCtx::get(x.M);
  std::vector<Rat> out(ctx.deg, Rat(0));
  for (long i = 0; i < ctx.deg; ++i) {
    if (x.c[i] == 0) continue;
    const auto& pw = ctx.zpow[(x.M - i) % x.M];
    for (long j = 0; j < ctx.deg; ++j) out[j] += x.c[i] * pw[j];
  }
  return CycNum(x.M, std::move(out));
}

inline CycNum cyc_inv(const CycNum& x) {
  if (x.is_zero()) throw std::logic_error("cyclotomic division by zero");
  if (x.M == 0) return CycNum(Rat(1) / x.c[0]);
  const CycCtx& ctx = CycCtx::get(x.M);
  detail::Poly f(x.c.begin(), x.c.end());
  detail::poly_trim(f);
  detail::Poly g, s, t;
  detail::poly_xgcd(f, ctx.phi, g, s, t);
  if (g.size() != 1) throw std::logic_error("cyclotomic inverse failed");
  std::vector<Rat> out(ctx.deg, Rat(0));
  for (std::size_t i = 0; i < s.size() && i < out.size(); ++i) out[i] = s[i] / g[0];
  return CycNum(x.M, std::move(out));
}

inline CycNum operator/(const CycNum& a, const CycNum& b) { return a * cyc_inv(b); }

// cos and sin of 2*pi*num/den inside Q(zeta_M). Requires den | M and 4 | M.
inline std::pair<CycNum, CycNum> cos_sin(long M, long num, long den) {
  if (M % den != 0 || M % 4 != 0) throw std::logic_error("cos_sin needs den | M and 4 | M");
  CycNum z = root_of_unity(M, (M / den) * num);
  CycNum zbar = cyc_conj(z);
  CycNum i = root_of_unity(M, M / 4);
  CycNum two(2);
  return {(z + zbar) / two, (z - zbar) / (two * i)};
}

// Reduction map Q(zeta_M) -> F_p at a fixed primitive M-th root omega.
class FpCycMap {
 public:
  FpCycMap(long M, std::uint64_t p) : M_(M), p_(p) {
    if (M == 0) return;
    if ((p - 1) % static_cast<std::uint64_t>(M) != 0) throw bad_prime("p != 1 mod M");
    std::uint64_t omega = fp_root_of_unity(static_cast<std::uint64_t>(M), p);
    long deg = CycCtx::get(M).deg;
    pow_.resize(deg);
    std::uint64_t w = 1;
    for (long i = 0; i < deg; ++i) {
      pow_[i] = w;
      w = fp_mul(w, omega, p);
    }
    omega_ = omega;
  }

  std::uint64_t p() const { return p_; }
  std::uint64_t omega() const { return omega_; }

  std::uint64_t operator()(const CycNum& x) const {
    if (x.M == 0) return fp_of_rat(x.c[0], p_);
    if (x.M != M_) {
      if (M_ == 0 || M_ % x.M != 0) throw std::logic_error("FpCycMap modulus mismatch");
      return (*this)(cyc_embed(x, M_));
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      if (x.c[i] == 0) continue;
      acc = fp_add(acc, fp_mul(fp_of_rat(x.c[i], p_), pow_[i], p_), p_);
    }
    return acc;
  }

 private:
  long M_;
  std::uint64_t p_;
  std::uint64_t omega_ = 1;
  std::vector<std::uint64_t> pow_;
};

}  // namespace spinacc
