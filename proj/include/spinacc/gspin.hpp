#pragma once
// Morphisms into the scalar-extended spin group, their fiber-product double
// cover, and the transfer of the acceptability verdict to the spin part.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "spinacc/acceptability.hpp"
#include "spinacc/clifford.hpp"
#include "spinacc/group.hpp"

namespace spinacc {

namespace detail {

inline bool cyc_lex_less(const CycNum& a, const CycNum& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

}  // namespace detail

// Element of the scalar-extended spin group: a root-of-unity scalar times a
// spin element, with (z, s) and (-z, -s) identified. The stored pair is the
// representative whose scalar is smaller in coefficient order.
struct GSpinElement {
  CycNum scalar{1};
  Clif spin;

  GSpinElement() = default;
  GSpinElement(CycNum z, Clif s) : scalar(std::move(z)), spin(std::move(s)) { normalize(); }

  void normalize() {
    CycNum neg = -scalar;
    if (detail::cyc_lex_less(neg, scalar)) {
      scalar = std::move(neg);
      spin = -spin;
    }
  }

  GSpinElement operator*(const GSpinElement& o) const {
    return GSpinElement(scalar * o.scalar, spin * o.spin);
  }
  GSpinElement inverse() const { return GSpinElement(cyc_inv(scalar), pin_inverse(spin)); }
  bool operator==(const GSpinElement& o) const { return scalar == o.scalar && spin == o.spin; }
};

// All characters of the group into the d-th roots of unity, as exponent
// vectors on the generators. A candidate assignment is a character exactly
// when its values propagate consistently over the whole right Cayley graph.
inline std::vector<std::vector<long>> scalar_characters(const ClosedGroup& G, long d) {
  long g = G.num_gens();
  std::vector<std::vector<long>> cand(static_cast<std::size_t>(g));
  for (long i = 0; i < g; ++i) {
    long ord = G.element_order(G.gen_index(i));
    long stride = d / std::gcd(d, ord);
    for (long a = 0; a < d; a += stride) cand[static_cast<std::size_t>(i)].push_back(a);
  }
  std::vector<std::vector<long>> out;
  std::vector<long> pick(static_cast<std::size_t>(g), 0);
  std::vector<long> val(static_cast<std::size_t>(G.size()));
  auto consistent = [&]() {
    std::fill(val.begin(), val.end(), -1);
    val[0] = 0;
    std::vector<long> queue = {0};
    while (!queue.empty()) {
      long e = queue.back();
      queue.pop_back();
      for (long i = 0; i < g; ++i) {
        long t = G.step(e, i);
        long v = (val[static_cast<std::size_t>(e)] + pick[static_cast<std::size_t>(i)]) % d;
        long& slot = val[static_cast<std::size_t>(t)];
        if (slot < 0) {
          slot = v;
          queue.push_back(t);
        } else if (slot != v) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g), 0);
  while (true) {
    for (long i = 0; i < g; ++i) pick[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(i)][cursor[static_cast<std::size_t>(i)]];
    if (consistent()) out.push_back(pick);
    long i = 0;
    for (; i < g; ++i) {
      std::size_t& c = cursor[static_cast<std::size_t>(i)];
      if (++c < cand[static_cast<std::size_t>(i)].size()) break;
      c = 0;
    }
    if (i == g) break;
  }
  return out;
}

// Deterministic sample of scalar twist tags, drawn from the characters into
// the fourth and eighth roots of unity and expressed as zeta_M exponents.
inline std::vector<std::vector<long>> sample_scalar_twists(const ClosedGroup& G, long count,
                                                           std::uint64_t seed) {
  long M = G.M();
  std::vector<std::vector<long>> pool;
  for (long d : {4L, 8L}) {
    if (M % d != 0) continue;
    for (const auto& ch : scalar_characters(G, d)) {
      std::vector<long> tag(ch.size());
      for (std::size_t i = 0; i < ch.size(); ++i) tag[i] = ch[i] * (M / d) % M;
      pool.push_back(std::move(tag));
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long>> out;
  for (long i = 0; i < count; ++i) out.push_back(pool[rng() % pool.size()]);
  return out;
}

struct GammaRData {
  long image_order = 0;         // closure of the tagged generators in the extended group
  long cover_order = 0;         // fiber product of the image with the spin group
  bool two_to_one = false;      // the cover projects onto the image with kernel {(1, +-1)}
  long scalar_image_order = 0;  // order of the scalar projection of the cover
  GroupInstance spin_instance;  // generators replaced by their spin parts
};

// Fiber-product double cover of a scalar-tagged instance. Elements of the
// source closure are encoded as (base element, scalar exponent); the lift
// table of the base group provides the sign cocycle, so every product stays
// in index arithmetic.
class GSpinCover {
 public:
  explicit GSpinCover(const ClosedGroup& base) : G_(base) {
    if (!G_.has_lifts()) throw input_error("scalar-extended covers need spin lifts");
    long n = G_.size(), g = G_.num_gens();
    coc_.assign(static_cast<std::size_t>(n), std::vector<signed char>(static_cast<std::size_t>(g), 0));
    for (long e = 0; e < n; ++e)
      for (long i = 0; i < g; ++i) {
        // both sides lift the same rotation, so the product is plus or minus
        // the target and one blade coefficient decides which
        const Clif& tgt = G_.lift(G_.step(e, i));
        const auto& [blade, coeff] = *tgt.terms.begin();
        CycNum got = product_blade_coeff(G_.lift(e), G_.lift(G_.gen_index(i)), blade);
        if (got == coeff)
          coc_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] = 1;
        else if (got == CycNum(0) - coeff)
          coc_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] = -1;
        else
          throw std::logic_error("lift table is not multiplicative up to sign");
      }
  }

  const ClosedGroup& base() const { return G_; }
  int cocycle(long e, long i) const { return coc_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]; }

  GammaRData build(const std::vector<long>& zeta_pow) const {
    long M = G_.M(), n = G_.size(), g = G_.num_gens();
    if (static_cast<long>(zeta_pow.size()) != g) throw input_error("one scalar exponent per generator");
    long half = M / 2;

    // closure of the tagged generators; state (e, k) stands for zeta^k lift(e)
    std::vector<signed char> seen(static_cast<std::size_t>(n * M), 0);
    std::vector<long> queue;
    auto visit = [&](long e, long k, std::vector<long>& q) {
      long s = e * M + k;
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        q.push_back(s);
      }
    };
    visit(0, 0, queue);
    long image = 0;
    while (!queue.empty()) {
      long s = queue.back();
      queue.pop_back();
      ++image;
      long e = s / M, k = s % M;
      for (long i = 0; i < g; ++i) {
        long kk = (k + zeta_pow[static_cast<std::size_t>(i)] +
                   (cocycle(e, i) < 0 ? half : 0)) % M;
        visit(G_.step(e, i), kk, queue);
      }
    }

    // fiber product; state ((e, k), delta) with spin part delta * lift(e)
    std::vector<signed char> cseen(static_cast<std::size_t>(n * M * 2), 0);
    std::vector<long> cqueue;
    auto cvisit = [&](long e, long k, int delta, std::vector<long>& q) {
      long s = (e * M + k) * 2 + (delta < 0 ? 1 : 0);
      if (!cseen[static_cast<std::size_t>(s)]) {
        cseen[static_cast<std::size_t>(s)] = 1;
        q.push_back(s);
      }
    };
    cvisit(0, 0, 1, cqueue);
    long cover = 0;
    long scalar_gcd = M;
    while (!cqueue.empty()) {
      long s = cqueue.back();
      cqueue.pop_back();
      ++cover;
      int delta = (s & 1) ? -1 : 1;
      long e = (s >> 1) / M, k = (s >> 1) % M;
      long rz = (k + (delta < 0 ? half : 0)) % M;
      scalar_gcd = std::gcd(scalar_gcd, rz);
      for (long i = 0; i < g; ++i) {
        int c = cocycle(e, i);
        long kk = (k + zeta_pow[static_cast<std::size_t>(i)] + (c < 0 ? half : 0)) % M;
        cvisit(G_.step(e, i), kk, delta * c, cqueue);
      }
      // the central pair (1, -1) is a generator of the fiber product
      cvisit(e, k, -delta, cqueue);
    }

    GammaRData out;
    out.image_order = image;
    out.cover_order = cover;
    out.two_to_one = cover == 2 * image && cseen[0] && cseen[1];
    out.scalar_image_order = M / std::gcd(scalar_gcd, M);
    out.spin_instance = G_.instance();
    out.spin_instance.name = G_.instance().name + "|rs";
    return out;
  }

 private:
  const ClosedGroup& G_;
  std::vector<std::vector<signed char>> coc_;
};

struct GSpinVerdict {
  bool gspin_acceptable = false;  // verdict carried through the cover's spin part
  bool spin_acceptable = false;   // verdict of the scalar-free base instance
  GammaRData cover;
};

// Acceptability of a scalar-tagged instance: the engine runs on the spin part
// of the fiber-product cover, whose matrix closure forgets the scalars.
class GSpinEngine {
 public:
  explicit GSpinEngine(const ClosedGroup& base, std::uint64_t seed = 1)
      : cover_(base), base_acc_(base, seed), seed_(seed) {}

  const GSpinCover& cover_builder() const { return cover_; }
  const Acceptability& base_acceptability() const { return base_acc_; }

  GSpinVerdict run(const std::vector<long>& zeta_pow) const {
    GSpinVerdict out;
    out.cover = cover_.build(zeta_pow);
    GroupInstance rs = out.cover.spin_instance;
    rs.lifts.clear();  // the verdict never consults the double cover
    ClosedGroup grs(rs);
    Acceptability acc(grs, seed_);
    out.gspin_acceptable = acc.report().acceptable;
    out.spin_acceptable = base_acc_.report().acceptable;
    return out;
  }

 private:
  GSpinCover cover_;
  Acceptability base_acc_;
  std::uint64_t seed_;
};

inline GSpinVerdict gspin_acceptable(const GroupInstance& inst, const std::vector<long>& zeta_pow,
                                     std::uint64_t seed = 1) {
  ClosedGroup g(inst);
  return GSpinEngine(g, seed).run(zeta_pow);
}

}  // namespace spinacc
