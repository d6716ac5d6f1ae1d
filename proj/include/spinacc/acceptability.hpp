#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "spinacc/modrep.hpp"
#include "spinacc/spin_rep.hpp"

namespace spinacc {

// The lifting obstruction for a sign character eta: eta(g) must be an
// eigenvalue of g for every group element. Constant on classes, so classes
// suffice. Three independent routes decide it; the context caches the
// per-class characteristic polynomials and spin traces they consume.
class U1Context {
 public:
  explicit U1Context(const ClosedGroup& G) : G_(G) {
    cp_.reserve(static_cast<std::size_t>(G.num_classes()));
    for (long c = 0; c < G.num_classes(); ++c)
      cp_.push_back(charpoly_fl(G.exact(G.class_reps()[static_cast<std::size_t>(c)])));
  }

  const ClosedGroup& group() const { return G_; }
  const std::vector<CycNum>& charpoly(long c) const { return cp_[static_cast<std::size_t>(c)]; }

  // Route 1, the definition: eta(g) is a root of the characteristic polynomial.
  bool route_eigen(const ClosedGroup::Mu2Char& eta) const {
    return witness_class(eta) < 0;
  }

  // First class refuting the eigenvalue condition, or -1 when none does.
  long witness_class(const ClosedGroup::Mu2Char& eta) const {
    for (long c = 0; c < G_.num_classes(); ++c) {
      long rep = G_.class_reps()[static_cast<std::size_t>(c)];
      CycNum v(static_cast<int>(eta.values[static_cast<std::size_t>(rep)]));
      if (!is_zero(eval_poly(cp_[static_cast<std::size_t>(c)], v))) return c;
    }
    return -1;
  }

  // Route 2, through the truncated exterior algebra (sum of Lambda^i for
  // 0 <= i <= (n-1)/2): its character vanishes exactly where -1 is an
  // eigenvalue, so the twist by eta is an isomorphism iff the character
  // vanishes on the eta = -1 locus. The +1 part of the condition holds for
  // every special orthogonal matrix in odd dimension.
  bool route_exterior(const ClosedGroup::Mu2Char& eta) const {
    long n = G_.n();
    long k = (n - 1) / 2;
    for (long c = 0; c < G_.num_classes(); ++c) {
      long rep = G_.class_reps()[static_cast<std::size_t>(c)];
      if (eta.values[static_cast<std::size_t>(rep)] != -1) continue;
      const auto& cp = cp_[static_cast<std::size_t>(c)];
      CycNum sum(0);
      for (long i = 0; i <= k; ++i) {
        CycNum ei = cp[static_cast<std::size_t>(n - i)];
        if (i % 2 == 1) ei = CycNum(0) - ei;
        sum = sum + ei;
      }
      if (!is_zero(sum)) return false;
    }
    return true;
  }

  // Route 3, through the spin representation: the twist by eta fixes the spin
  // module iff the spin character vanishes on the eta = -1 locus. The spin
  // character of a class is well defined up to sign, so vanishing is
  // intrinsic. Requires stored lifts.
  bool route_spin(const ClosedGroup::Mu2Char& eta) const {
    if (!G_.has_lifts()) throw basis_unavailable("spin route requires lifts");
    if (spin_trace_.empty()) {
      const SpinRep& S = SpinRep::get(G_.n());
      for (long c = 0; c < G_.num_classes(); ++c)
        spin_trace_.push_back(S.character(G_.lift(G_.class_reps()[static_cast<std::size_t>(c)])));
    }
    for (long c = 0; c < G_.num_classes(); ++c) {
      long rep = G_.class_reps()[static_cast<std::size_t>(c)];
      if (eta.values[static_cast<std::size_t>(rep)] != -1) continue;
      if (!is_zero(spin_trace_[static_cast<std::size_t>(c)])) return false;
    }
    return true;
  }

 private:
  const ClosedGroup& G_;
  std::vector<std::vector<CycNum>> cp_;
  mutable std::vector<CycNum> spin_trace_;
};

inline bool u1_route_eigen(const ClosedGroup& G, const ClosedGroup::Mu2Char& eta) {
  return U1Context(G).route_eigen(eta);
}

inline bool u1_route_exterior(const ClosedGroup& G, const ClosedGroup::Mu2Char& eta) {
  return U1Context(G).route_exterior(eta);
}

inline bool u1_route_spin(const ClosedGroup& G, const ClosedGroup::Mu2Char& eta) {
  return U1Context(G).route_spin(eta);
}

// Witness for a failed obstruction check: a class where eta(g) is not an
// eigenvalue, certified by a nonzero determinant of r(g) - eta(g).
struct U1Failure {
  long class_index = -1;
};

struct StableLine {
  ClosedGroup::Mu2Char chi;
  long mult = 0;
  std::vector<CycNum> witness;  // one exact eigenvector
};

struct EtaVerdict {
  ClosedGroup::Mu2Char eta;
  bool u1 = false;
  bool in_x = false;
  bool unacceptable = false;         // u1 && !in_x
  std::optional<U1Failure> failure;  // set when !u1
};

struct AcceptabilityReport {
  std::uint64_t p1 = 0, p2 = 0;
  std::vector<std::vector<int>> x_generators;   // det sign patterns of real-type constituents
  std::vector<ClosedGroup::Mu2Char> x_set;      // the subgroup they generate
  std::vector<StableLine> y_set;                // characters on stable lines, with multiplicity
  std::vector<EtaVerdict> verdicts;             // one per sign character
  std::vector<ClosedGroup::Mu2Char> e_set;      // unacceptable sign characters
  bool acceptable = true;
  bool discrete = false;
  bool stable = false;
};

namespace detail {

inline std::vector<std::vector<int>> sign_group_closure(std::vector<std::vector<int>> gens, long width) {
  std::set<std::vector<int>> out;
  out.insert(std::vector<int>(static_cast<std::size_t>(width), 1));
  for (const auto& g : gens) out.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
        if (out.insert(c).second) grew = true;
      }
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

// Exact multiplicity and witness of the chi-eigenspace: simultaneous exact
// kernel of r(g_i) - chi(g_i) over the cyclotomic field.
inline StableLine exact_line_data(const ClosedGroup& G, const ClosedGroup::Mu2Char& chi) {
  long n = G.n();
  long ng = G.num_gens();
  Mat<CycNum> stacked(ng * n, n);
  for (long i = 0; i < ng; ++i) {
    Mat<CycNum> d = G.exact(G.gen_index(i));
    if (chi.gen_signs[static_cast<std::size_t>(i)] == 1) {
      for (long r = 0; r < n; ++r) d.at(r, r) = d.at(r, r) - CycNum(1);
    } else {
      for (long r = 0; r < n; ++r) d.at(r, r) = d.at(r, r) + CycNum(1);
    }
    for (long r = 0; r < n; ++r)
      for (long col = 0; col < n; ++col) stacked.at(i * n + r, col) = d.at(r, col);
  }
  auto ker = kernel_basis(stacked);
  StableLine out;
  out.chi = chi;
  out.mult = static_cast<long>(ker.size());
  if (!ker.empty()) out.witness = ker[0];
  return out;
}

class Acceptability {
 public:
  explicit Acceptability(const ClosedGroup& G, std::uint64_t seed = 1)
      : Acceptability(G, choose_primes(G), seed) {}

  Acceptability(const ClosedGroup& G, std::pair<std::uint64_t, std::uint64_t> primes, std::uint64_t seed)
      : G_(G), tp_(G, primes, seed) {
    build();
  }

  const ClosedGroup& group() const { return G_; }
  const ModRep& modrep() const { return tp_.first; }
  const ModRep& modrep_second() const { return tp_.second; }
  const AcceptabilityReport& report() const { return rep_; }

 private:
  void build() {
    rep_.p1 = tp_.p1;
    rep_.p2 = tp_.p2;
    const auto& cons = tp_.first.constituents();

    // obstruction subgroup from determinants of real-type constituents
    for (const auto& c : cons)
      if (c.fs == 1) rep_.x_generators.push_back(c.det_signs);
    auto x_vectors = detail::sign_group_closure(rep_.x_generators, G_.num_gens());
    auto all_chars = G_.mu2_characters();
    for (const auto& chi : all_chars)
      if (std::find(x_vectors.begin(), x_vectors.end(), chi.gen_signs) != x_vectors.end())
        rep_.x_set.push_back(chi);
    if (rep_.x_set.size() != x_vectors.size())
      throw std::logic_error("a determinant pattern does not define a character");

    // stable lines, with the mod-p multiplicity as the cross-check
    for (const auto& chi : all_chars) {
      StableLine line = exact_line_data(G_, chi);
      long modp = tp_.first.mu2_multiplicity(chi);
      if (modp != line.mult) throw std::logic_error("line multiplicity routes disagree");
      if (line.mult > 0) rep_.y_set.push_back(std::move(line));
    }

    // verdict per sign character
    U1Context u1ctx(G_);
    for (const auto& eta : all_chars) {
      EtaVerdict v;
      v.eta = eta;
      long w = u1ctx.witness_class(eta);
      v.u1 = w < 0;
      if (!v.u1) v.failure = U1Failure{w};
      v.in_x = std::find(rep_.x_set.begin(), rep_.x_set.end(), eta) != rep_.x_set.end();
      v.unacceptable = v.u1 && !v.in_x;
      if (v.unacceptable) rep_.e_set.push_back(eta);
      rep_.verdicts.push_back(std::move(v));
    }
    rep_.acceptable = rep_.e_set.empty();

    // structural guards: the trivial character is never an obstruction, and
    // the obstruction subgroup permutes the unacceptable characters
    for (const auto& eta : rep_.e_set)
      if (eta.is_trivial()) throw std::logic_error("trivial character marked unacceptable");
    for (const auto& eta : rep_.e_set)
      for (const auto& x : rep_.x_set) {
        std::vector<int> prod(eta.gen_signs.size());
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = eta.gen_signs[i] * x.gen_signs[i];
        bool found = false;
        for (const auto& e2 : rep_.e_set)
          if (e2.gen_signs == prod) found = true;
        if (!found) throw std::logic_error("obstruction subgroup does not preserve the unacceptable set");
      }

    // regularity of the decomposition
    rep_.discrete = true;
    for (const auto& c : cons)
      if (c.fs != 1 || c.mult != 1) rep_.discrete = false;
    rep_.stable = rep_.discrete;
    if (rep_.discrete) {
      long m = static_cast<long>(cons.size());
      for (long mask = 1; mask < (1 << m) && rep_.stable; ++mask) {
        long dim = 0;
        std::vector<int> det(static_cast<std::size_t>(G_.num_gens()), 1);
        for (long i = 0; i < m; ++i)
          if (mask & (1L << i)) {
            dim += cons[static_cast<std::size_t>(i)].dim;
            for (std::size_t g = 0; g < det.size(); ++g)
              det[g] *= cons[static_cast<std::size_t>(i)].det_signs[g];
          }
        bool trivial_det = std::all_of(det.begin(), det.end(), [](int s) { return s == 1; });
        if (dim % 2 == 0 && trivial_det) rep_.stable = false;
      }
    }
  }

  const ClosedGroup& G_;
  TwoPrimeDecomposition tp_;
  AcceptabilityReport rep_;
};

// Independent re-check of a report. The eigenvalue claims are settled by
// fraction-free determinants rather than characteristic polynomials, the
// obstruction subgroup is rebuilt at a fresh prime, and the line witnesses
// are verified exactly. Throws certificate_error on any mismatch.
inline void verify_acceptability(const ClosedGroup& G, const AcceptabilityReport& rep, std::uint64_t seed = 1) {
  // obstruction subgroup at a prime used by neither pass
  std::uint64_t m = static_cast<std::uint64_t>(std::lcm(G.M(), G.exponent()));
  std::uint64_t p3 = next_prime_1_mod(m, rep.p2);
  ModRep fresh(G, p3, seed + 17);
  std::vector<std::vector<int>> xg;
  for (const auto& c : fresh.constituents())
    if (c.fs == 1) xg.push_back(c.det_signs);
  auto xv = detail::sign_group_closure(xg, G.num_gens());
  std::sort(xv.begin(), xv.end());
  std::vector<std::vector<int>> claimed;
  for (const auto& chi : rep.x_set) claimed.push_back(chi.gen_signs);
  std::sort(claimed.begin(), claimed.end());
  if (xv != claimed) throw certificate_error("obstruction subgroup not reproduced at a fresh prime");

  // eigenvalue claims, by determinant
  for (const auto& v : rep.verdicts) {
    if (v.u1) {
      for (long c = 0; c < G.num_classes(); ++c) {
        long repel = G.class_reps()[static_cast<std::size_t>(c)];
        Mat<CycNum> d = G.exact(repel);
        CycNum ev(static_cast<int>(v.eta.values[static_cast<std::size_t>(repel)]));
        for (long i = 0; i < d.rows; ++i) d.at(i, i) = d.at(i, i) - ev;
        if (!is_zero(det_bareiss(d))) throw certificate_error("claimed eigenvalue is absent");
      }
    } else {
      if (!v.failure) throw certificate_error("failed obstruction check has no witness class");
      long repel = G.class_reps()[static_cast<std::size_t>(v.failure->class_index)];
      Mat<CycNum> d = G.exact(repel);
      CycNum ev(static_cast<int>(v.eta.values[static_cast<std::size_t>(repel)]));
      for (long i = 0; i < d.rows; ++i) d.at(i, i) = d.at(i, i) - ev;
      if (is_zero(det_bareiss(d))) throw certificate_error("witness class does not refute the eigenvalue claim");
    }
    bool in_x = false;
    for (const auto& chi : rep.x_set)
      if (chi.gen_signs == v.eta.gen_signs) in_x = true;
    if (v.in_x != in_x) throw certificate_error("membership flag disagrees with the obstruction subgroup");
    if (v.unacceptable != (v.u1 && !v.in_x)) throw certificate_error("verdict flag is inconsistent");
  }

  // line witnesses, exactly
  for (const auto& line : rep.y_set) {
    if (line.mult <= 0 || line.witness.empty()) throw certificate_error("stable line lacks a witness");
    bool nonzero = false;
    for (const auto& c : line.witness)
      if (!is_zero(c)) nonzero = true;
    if (!nonzero) throw certificate_error("stable line witness is zero");
    for (long i = 0; i < G.num_gens(); ++i) {
      const Mat<CycNum>& g = G.exact(G.gen_index(i));
      CycNum s(line.chi.gen_signs[static_cast<std::size_t>(i)]);
      for (long r = 0; r < g.rows; ++r) {
        CycNum acc(0);
        for (long c = 0; c < g.cols; ++c) acc = acc + g.at(r, c) * line.witness[static_cast<std::size_t>(c)];
        if (!(acc == s * line.witness[static_cast<std::size_t>(r)]))
          throw certificate_error("stable line witness is not an eigenvector");
      }
    }
    StableLine recount = exact_line_data(G, line.chi);
    if (recount.mult != line.mult) throw certificate_error("stable line multiplicity not reproduced");
  }

  // the unacceptable set is exactly what the verdicts say
  std::vector<std::vector<int>> e_claim, e_derived;
  for (const auto& eta : rep.e_set) e_claim.push_back(eta.gen_signs);
  for (const auto& v : rep.verdicts)
    if (v.u1 && !v.in_x) e_derived.push_back(v.eta.gen_signs);
  std::sort(e_claim.begin(), e_claim.end());
  std::sort(e_derived.begin(), e_derived.end());
  if (e_claim != e_derived) throw certificate_error("unacceptable set disagrees with the verdicts");
  if (rep.acceptable != e_claim.empty()) throw certificate_error("acceptability flag disagrees with the set");
}

}  // namespace spinacc
