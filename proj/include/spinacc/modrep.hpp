#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "spinacc/fp_matrix.hpp"
#include "spinacc/group.hpp"

namespace spinacc {

namespace detail {

// Polynomials over F_p, poly[i] = coefficient of x^i.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_poly_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_poly_mul(const FpPoly& f, const FpPoly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  FpPoly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      h[i + j] = fp_add(h[i + j], fp_mul(f[i], g[j], p), p);
  }
  return h;
}

inline FpPoly fp_poly_mod(FpPoly f, const FpPoly& g, std::uint64_t p) {
  std::uint64_t lead_inv = fp_inv(g.back(), p);
  while (f.size() >= g.size()) {
    std::uint64_t c = fp_mul(f.back(), lead_inv, p);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = fp_sub(f[shift + i], fp_mul(c, g[i], p), p);
    fp_poly_trim(f);
  }
  return f;
}

inline FpPoly fp_poly_gcd(FpPoly f, FpPoly g, std::uint64_t p) {
  fp_poly_trim(f);
  fp_poly_trim(g);
  while (!g.empty()) {
    FpPoly r = fp_poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty() && f.back() != 1) {
    std::uint64_t inv = fp_inv(f.back(), p);
    for (auto& c : f) c = fp_mul(c, inv, p);
  }
  return f;
}

inline FpPoly fp_poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& mod, std::uint64_t p) {
  FpPoly r = {1};
  base = fp_poly_mod(std::move(base), mod, p);
  while (e) {
    if (e & 1) r = fp_poly_mod(fp_poly_mul(r, base, p), mod, p);
    base = fp_poly_mod(fp_poly_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return r;
}

inline FpPoly fp_poly_deriv(const FpPoly& f, std::uint64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(fp_mul(f[i], i % p, p));
  fp_poly_trim(d);
  return d;
}

// All roots of a polynomial that splits into linear factors over F_p.
inline FpPoly fp_poly_divexact(const FpPoly& f, const FpPoly& g, std::uint64_t p) {
  FpPoly rem = f, quot(f.size() - g.size() + 1, 0);
  std::uint64_t lead_inv = fp_inv(g.back(), p);
  while (rem.size() >= g.size()) {
    std::uint64_t c = fp_mul(rem.back(), lead_inv, p);
    std::size_t shift = rem.size() - g.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i)
      rem[shift + i] = fp_sub(rem[shift + i], fp_mul(c, g[i], p), p);
    fp_poly_trim(rem);
  }
  fp_poly_trim(quot);
  return quot;
}

// Product of the distinct irreducible factors of f; valid only for deg f < p.
inline FpPoly fp_poly_squarefree_part(FpPoly f, std::uint64_t p) {
  fp_poly_trim(f);
  if (f.size() <= 1) return f;
  FpPoly d = fp_poly_deriv(f, p);
  FpPoly q = fp_poly_gcd(f, d, p);
  return q.size() <= 1 ? f : fp_poly_divexact(f, q, p);
}

// Cantor-Zassenhaus equal-degree splitting on the squarefree part.
inline std::vector<std::uint64_t> fp_poly_roots(const FpPoly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  FpPoly g = fp_poly_squarefree_part(f_in, p);
  if (g.size() <= 1) return {};
  // restrict to the part that splits into distinct linear factors
  FpPoly x_to_p = fp_poly_powmod({0, 1}, p, g, p);
  if (x_to_p.size() < 2) x_to_p.resize(2, 0);
  FpPoly xp_minus_x = x_to_p;
  xp_minus_x[1] = fp_sub(xp_minus_x[1], 1, p);
  fp_poly_trim(xp_minus_x);
  FpPoly lin = xp_minus_x.empty() ? g : fp_poly_gcd(g, xp_minus_x, p);
  std::vector<std::uint64_t> roots;
  std::vector<FpPoly> stack = {lin};
  while (!stack.empty()) {
    FpPoly h = stack.back();
    stack.pop_back();
    fp_poly_trim(h);
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      // root of c1 x + c0
      roots.push_back(fp_mul(fp_neg(h[0], p), fp_inv(h[1], p), p));
      continue;
    }
    std::uint64_t a = rng() % p;
    FpPoly w = fp_poly_powmod({a, 1}, (p - 1) / 2, h, p);
    if (!w.empty()) w[0] = fp_sub(w[0], 1, p);
    fp_poly_trim(w);
    FpPoly g1 = w.empty() ? FpPoly{} : fp_poly_gcd(h, w, p);
    if (g1.size() <= 1 || g1.size() == h.size()) {
      stack.push_back(std::move(h));  // unlucky split, retry
      continue;
    }
    FpPoly quot = fp_poly_divexact(h, g1, p);
    stack.push_back(std::move(g1));
    stack.push_back(std::move(quot));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Pairwise coprime factors of the squarefree part of f: one linear polynomial
// per root in F_p, plus one polynomial per irreducible-factor degree >= 2.
// The factors multiply to the squarefree part; valid only for deg f < p.
inline std::vector<FpPoly> fp_poly_coprime_parts(const FpPoly& f, std::uint64_t p, std::mt19937_64& rng) {
  FpPoly sq = fp_poly_squarefree_part(f, p);
  std::vector<FpPoly> parts;
  if (sq.size() <= 1) return parts;
  std::uint64_t lead_inv = fp_inv(sq.back(), p);
  for (auto& c : sq) c = fp_mul(c, lead_inv, p);
  FpPoly frob = {0, 1};
  for (std::size_t k = 1; sq.size() > 1; ++k) {
    if (sq.size() <= 2 * k) {
      parts.push_back(sq);
      break;
    }
    frob = fp_poly_powmod(frob, p, sq, p);
    FpPoly shifted = frob;
    if (shifted.size() < 2) shifted.resize(2, 0);
    shifted[1] = fp_sub(shifted[1], 1, p);
    fp_poly_trim(shifted);
    FpPoly g = shifted.empty() ? sq : fp_poly_gcd(sq, shifted, p);
    if (g.size() <= 1) continue;
    if (k == 1) {
      for (std::uint64_t r : fp_poly_roots(g, p, rng)) parts.push_back({fp_neg(r, p), 1});
    } else {
      parts.push_back(g);
    }
    if (g.size() == sq.size()) break;
    sq = fp_poly_divexact(sq, g, p);
    frob = fp_poly_mod(frob, sq, p);
  }
  return parts;
}

inline FpPoly fp_charpoly(const FpMat& A) {
  // Faddeev-LeVerrier; valid because p exceeds the matrix dimension.
  long n = A.rows;
  std::uint64_t p = A.p;
  FpPoly c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  FpMat M = FpMat::eye(p, n);
  if (n >= 1) c[static_cast<std::size_t>(n - 1)] = fp_neg(fp_trace(A), p);
  for (long k = 2; k <= n; ++k) {
    FpMat AM = A * M;
    for (long i = 0; i < n; ++i)
      AM.at(i, i) = fp_add(AM.at(i, i), c[static_cast<std::size_t>(n - k + 1)], p);
    M = AM;
    std::uint64_t t = fp_trace(A * M);
    c[static_cast<std::size_t>(n - k)] = fp_mul(fp_neg(t, p), fp_inv(static_cast<std::uint64_t>(k) % p, p), p);
  }
  return c;
}

}  // namespace detail

// Working primes for a closed group: p = 1 (mod lcm(M, exponent)), p greater
// than both the group order and 100. The second prime is strictly larger.
inline std::pair<std::uint64_t, std::uint64_t> choose_primes(const ClosedGroup& G) {
  std::uint64_t m = static_cast<std::uint64_t>(std::lcm(G.M(), G.exponent()));
  std::uint64_t floor = static_cast<std::uint64_t>(std::max(G.size(), 100L));
  std::uint64_t p1 = next_prime_1_mod(m, floor);
  std::uint64_t p2 = next_prime_1_mod(m, p1);
  return {p1, p2};
}

// Decomposition of the defining n-dimensional representation over F_p, where
// F_p is a splitting field (p = 1 mod exponent). Constituents are the
// distinct irreducible summands with multiplicities, characters per class,
// Frobenius-Schur indicators, and determinant characters per generator.
class ModRep {
 public:
  struct Constituent {
    long dim = 0;
    long mult = 0;
    int fs = 0;                              // +1 real, 0 complex, -1 quaternionic
    std::vector<std::uint64_t> chi;          // character value per class
    std::vector<std::uint64_t> det_gen;      // det of the action, per generator
    std::vector<int> det_signs;              // det_gen as +-1; real-type only
    FpMat basis;                             // ambient n x dim representative
  };

  ModRep(const ClosedGroup& G, std::uint64_t p, std::uint64_t seed) : G_(G), p_(p), rmap_(G.M(), p), rng_(seed) {
    if (p <= static_cast<std::uint64_t>(G.size())) throw bad_prime("working prime not above group order");
    if ((p - 1) % static_cast<std::uint64_t>(G.exponent()) != 0)
      throw bad_prime("working prime not 1 mod group exponent");
    for (long i = 0; i < G.num_gens(); ++i)
      gen_.push_back(fp_reduce(G.instance().gens[static_cast<std::size_t>(i)], rmap_));
    long nc = G.num_classes();
    class_rep_mat_.reserve(nc);
    for (long c = 0; c < nc; ++c)
      class_rep_mat_.push_back(fp_reduce(G.exact(G.class_reps()[static_cast<std::size_t>(c)]), rmap_));
    inv_class_.resize(nc);
    sq_class_.resize(nc);
    for (long c = 0; c < nc; ++c) {
      long r = G.class_reps()[static_cast<std::size_t>(c)];
      inv_class_[static_cast<std::size_t>(c)] = G.class_of()[static_cast<std::size_t>(G.inverse(r))];
      sq_class_[static_cast<std::size_t>(c)] = G.class_of()[static_cast<std::size_t>(G.product(r, r))];
    }
    decompose();
  }

  std::uint64_t p() const { return p_; }
  const FpCycMap& reduction() const { return rmap_; }
  const std::vector<Constituent>& constituents() const { return cons_; }
  const ClosedGroup& group() const { return G_; }

  // (1/|G|) sum over classes of |c| a(c) b(c^{-1}), all mod p.
  std::uint64_t inner(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::uint64_t acc = 0;
    for (long c = 0; c < G_.num_classes(); ++c) {
      std::uint64_t term = fp_mul(a[static_cast<std::size_t>(c)],
                                  b[static_cast<std::size_t>(inv_class_[static_cast<std::size_t>(c)])], p_);
      acc = fp_add(acc, fp_mul(static_cast<std::uint64_t>(G_.class_sizes()[static_cast<std::size_t>(c)]) % p_, term, p_), p_);
    }
    return fp_mul(acc, fp_inv(static_cast<std::uint64_t>(G_.size()) % p_, p_), p_);
  }

  // Small nonnegative integer behind a mod-p value; throws when implausible.
  long as_small_int(std::uint64_t v, long bound) const {
    if (v <= static_cast<std::uint64_t>(bound)) return static_cast<long>(v);
    throw bad_prime("mod-p value is not a small integer");
  }

  const std::vector<long>& inverse_class() const { return inv_class_; }
  const std::vector<long>& square_class() const { return sq_class_; }

  // Character of the defining representation per class.
  const std::vector<std::uint64_t>& defining_character() const { return chi_E_; }

  // Multiplicity of a mu2 character inside E (counts stable lines of that sign pattern).
  long mu2_multiplicity(const ClosedGroup::Mu2Char& chi) const {
    std::vector<std::uint64_t> cv(static_cast<std::size_t>(G_.num_classes()));
    for (long c = 0; c < G_.num_classes(); ++c) {
      long rep = G_.class_reps()[static_cast<std::size_t>(c)];
      cv[static_cast<std::size_t>(c)] = chi.values[static_cast<std::size_t>(rep)] == 1 ? 1 : p_ - 1;
    }
    return as_small_int(inner(chi_E_, cv), G_.n());
  }

  // Shape fingerprint for the two-prime guard: sorted (dim, mult, fs, real det signs).
  std::vector<std::tuple<long, long, int, std::vector<int>>> shape() const {
    std::vector<std::tuple<long, long, int, std::vector<int>>> s;
    for (const auto& c : cons_)
      s.emplace_back(c.dim, c.mult, c.fs, c.fs == 1 ? c.det_signs : std::vector<int>{});
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  // Action of an ambient matrix on the column span of basis: solve B X = A B.
  FpMat restrict_action(const FpMat& A, const FpMat& basis) const {
    long d = basis.cols;
    FpMat AB = A * basis;
    FpMat X(p_, d, d);
    for (long j = 0; j < d; ++j) {
      std::vector<std::uint64_t> col(static_cast<std::size_t>(AB.rows));
      for (long i = 0; i < AB.rows; ++i) col[static_cast<std::size_t>(i)] = AB.at(i, j);
      std::vector<std::uint64_t> x;
      if (!fp_solve(basis, col, x)) throw std::logic_error("subspace is not invariant");
      for (long i = 0; i < d; ++i) X.at(i, j) = x[static_cast<std::size_t>(i)];
    }
    return X;
  }

  std::vector<std::vector<std::uint64_t>> commutant(const std::vector<FpMat>& acts) const {
    long d = acts.empty() ? 0 : acts[0].rows;
    FpMat sys(p_, static_cast<long>(acts.size()) * d * d, d * d);
    long row = 0;
    for (const auto& A : acts) {
      for (long r = 0; r < d; ++r)
        for (long s = 0; s < d; ++s) {
          for (long u = 0; u < d; ++u) sys.at(row, u * d + s) = fp_add(sys.at(row, u * d + s), A.at(r, u), p_);
          for (long v = 0; v < d; ++v) sys.at(row, r * d + v) = fp_sub(sys.at(row, r * d + v), A.at(v, s), p_);
          ++row;
        }
    }
    return fp_kernel_basis(sys);
  }

  void decompose() {
    long n = G_.n();
    std::vector<FpMat> leaves;
    std::vector<FpMat> work = {FpMat::eye(p_, n)};
    int guard = 0;
    while (!work.empty()) {
      if (++guard > 500) throw bad_prime("decomposition did not terminate");
      FpMat B = work.back();
      work.pop_back();
      long d = B.cols;
      std::vector<FpMat> acts;
      for (const auto& g : gen_) acts.push_back(restrict_action(g, B));
      auto comm = commutant(acts);
      if (comm.size() <= 1) {
        leaves.push_back(B);
        continue;
      }
      bool split_done = false;
      for (int attempt = 0; attempt < 20 && !split_done; ++attempt) {
        FpMat C(p_, d, d);
        for (const auto& v : comm) {
          std::uint64_t coef = rng_() % p_;
          for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
              C.at(i, j) = fp_add(C.at(i, j), fp_mul(coef, v[static_cast<std::size_t>(i * d + j)], p_), p_);
        }
        auto parts = detail::fp_poly_coprime_parts(detail::fp_charpoly(C), p_, rng_);
        if (parts.size() < 2) continue;
        // Kernels of coprime minimal-polynomial factors are invariant subspaces;
        // they exhaust the space exactly when C acts semisimply.
        std::vector<FpMat> pieces;
        long total = 0;
        for (const auto& f : parts) {
          FpMat fC(p_, d, d);
          for (long i = 0; i < d; ++i) fC.at(i, i) = f.back();
          for (std::size_t t = f.size() - 1; t-- > 0;) {
            fC = fC * C;
            for (long i = 0; i < d; ++i) fC.at(i, i) = fp_add(fC.at(i, i), f[t], p_);
          }
          auto ker = fp_kernel_basis(fC);
          if (ker.empty()) continue;
          FpMat sub(p_, d, static_cast<long>(ker.size()));
          for (long j = 0; j < sub.cols; ++j)
            for (long i = 0; i < d; ++i) sub.at(i, j) = ker[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          pieces.push_back(B * sub);
          total += sub.cols;
        }
        if (total == d && pieces.size() >= 2) {
          for (auto& piece : pieces) work.push_back(std::move(piece));
          split_done = true;
        }
      }
      if (!split_done) throw bad_prime("commutant element failed to split a reducible subspace");
    }

    // group leaves into isomorphism classes by character
    long nc = G_.num_classes();
    for (const auto& B : leaves) {
      std::vector<std::uint64_t> chi(static_cast<std::size_t>(nc));
      for (long c = 0; c < nc; ++c)
        chi[static_cast<std::size_t>(c)] = fp_trace(restrict_action(class_rep_mat_[static_cast<std::size_t>(c)], B));
      bool found = false;
      for (auto& con : cons_) {
        if (con.chi == chi) {
          ++con.mult;
          found = true;
          break;
        }
      }
      if (found) continue;
      Constituent con;
      con.dim = B.cols;
      con.mult = 1;
      con.chi = std::move(chi);
      con.basis = B;
      for (const auto& g : gen_) con.det_gen.push_back(fp_det(restrict_action(g, B)));
      cons_.push_back(std::move(con));
    }

    // Frobenius-Schur indicator per constituent: (1/|G|) sum chi(g^2)
    for (auto& con : cons_) {
      std::uint64_t acc = 0;
      for (long c = 0; c < nc; ++c) {
        std::uint64_t v = con.chi[static_cast<std::size_t>(sq_class_[static_cast<std::size_t>(c)])];
        acc = fp_add(acc, fp_mul(static_cast<std::uint64_t>(G_.class_sizes()[static_cast<std::size_t>(c)]) % p_, v, p_), p_);
      }
      acc = fp_mul(acc, fp_inv(static_cast<std::uint64_t>(G_.size()) % p_, p_), p_);
      if (acc == 0)
        con.fs = 0;
      else if (acc == 1)
        con.fs = 1;
      else if (acc == p_ - 1)
        con.fs = -1;
      else
        throw bad_prime("Frobenius-Schur indicator outside {0, 1, -1}");
      if (con.fs == 1) {
        for (std::uint64_t dv : con.det_gen) {
          if (dv == 1)
            con.det_signs.push_back(1);
          else if (dv == p_ - 1)
            con.det_signs.push_back(-1);
          else
            throw bad_prime("real-type determinant character is not a sign");
        }
      }
    }

    // defining character and multiplicity cross-check
    chi_E_.resize(static_cast<std::size_t>(nc));
    for (long c = 0; c < nc; ++c) chi_E_[static_cast<std::size_t>(c)] = fp_trace(class_rep_mat_[static_cast<std::size_t>(c)]);
    long dimsum = 0;
    for (const auto& con : cons_) {
      long m = as_small_int(inner(chi_E_, con.chi), n);
      if (m != con.mult) throw bad_prime("multiplicity mismatch between counting and inner product");
      long norm = as_small_int(inner(con.chi, con.chi), n);
      if (norm != 1) throw bad_prime("constituent character does not have norm 1");
      dimsum += con.dim * con.mult;
    }
    if (dimsum != n) throw bad_prime("constituent dimensions do not sum to n");
  }

  const ClosedGroup& G_;
  std::uint64_t p_;
  FpCycMap rmap_;
  std::mt19937_64 rng_;
  std::vector<FpMat> gen_;
  std::vector<FpMat> class_rep_mat_;
  std::vector<long> inv_class_, sq_class_;
  std::vector<Constituent> cons_;
  std::vector<std::uint64_t> chi_E_;
};

// Build decompositions at two independent primes and require identical shape.
struct TwoPrimeDecomposition {
  std::uint64_t p1, p2;
  ModRep first, second;

  TwoPrimeDecomposition(const ClosedGroup& G, std::uint64_t seed)
      : TwoPrimeDecomposition(G, choose_primes(G), seed) {}

  TwoPrimeDecomposition(const ClosedGroup& G, std::pair<std::uint64_t, std::uint64_t> primes, std::uint64_t seed)
      : p1(primes.first), p2(primes.second), first(G, p1, seed), second(G, p2, seed + 0x9e3779b97f4a7c15ull) {
    if (first.shape() != second.shape())
      throw bad_prime("decomposition shapes differ between working primes");
  }
};

}  // namespace spinacc
