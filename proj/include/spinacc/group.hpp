#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinacc/clifford.hpp"
#include "spinacc/fp_matrix.hpp"
#include "spinacc/matrix.hpp"

namespace spinacc {

// A finitely generated subgroup of SO(n) presented by exact matrices over
// Q(zeta_M), with optional spin lifts per generator.
struct GroupInstance {
  long n = 0;
  long M = 4;
  std::vector<Mat<CycNum>> gens;
  std::vector<Clif> lifts;  // empty, or one lift per generator
  std::vector<std::string> gen_names;
  std::string name;
};

// Closure of a GroupInstance, enumerated breadth-first over mod-p images.
//
// The reduction at a primitive M-th root mod p0 is injective on any finite
// subgroup of order <= max_order once p0 > max_order: an element of the
// congruence kernel has p-power order, and the group has none. Exact matrices
// are materialized on demand along BFS words; class representatives verify
// themselves against their fingerprints.
class ClosedGroup {
 public:
  explicit ClosedGroup(GroupInstance inst, long max_order = 20000)
      : inst_(std::move(inst)),
        max_order_(max_order),
        p0_(next_prime_1_mod(static_cast<std::uint64_t>(inst_.M),
                             static_cast<std::uint64_t>(std::max(max_order, 100L)))),
        map0_(inst_.M, p0_) {
    if (!inst_.lifts.empty() && inst_.lifts.size() != inst_.gens.size())
      throw input_error("lift count differs from generator count");
    for (std::size_t i = 0; i < inst_.lifts.size(); ++i) {
      if (!(pi_action(inst_.lifts[i]) == inst_.gens[i]))
        throw lift_mismatch("lift " + std::to_string(i) + " does not project onto its generator");
    }
    bfs();
    find_classes();
  }

  const GroupInstance& instance() const { return inst_; }
  long n() const { return inst_.n; }
  long M() const { return inst_.M; }
  long size() const { return static_cast<long>(fp_.size()); }
  long num_gens() const { return static_cast<long>(inst_.gens.size()); }
  bool has_lifts() const { return !inst_.lifts.empty(); }
  std::uint64_t working_prime() const { return p0_; }

  long gen_index(long i) const { return step_[0][static_cast<std::size_t>(i)]; }
  long step(long e, long i) const { return step_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)]; }

  // Index of a*b, walking b's defining word from a.
  long product(long a, long b) const {
    std::vector<long> w = word(b);
    long idx = a;
    for (long g : w) idx = step(idx, g);
    return idx;
  }

  long inverse(long a) const {
    long ord = element_order(a);
    long idx = 0;
    for (long t = 0; t < ord - 1; ++t) idx = product(idx, a);
    return idx;
  }

  long element_order(long a) const {
    long idx = a, ord = 1;
    while (idx != 0) {
      idx = product(idx, a);
      ++ord;
    }
    return ord;
  }

  long exponent() const {
    long e = 1;
    for (long r : class_reps_) e = std::lcm(e, element_order(r));
    return e;
  }

  const Mat<CycNum>& exact(long e) const {
    auto it = exact_.find(e);
    if (it != exact_.end()) return it->second;
    Mat<CycNum> m = (e == 0) ? Mat<CycNum>::eye(inst_.n)
                             : exact(parent_[static_cast<std::size_t>(e)]) * inst_.gens[static_cast<std::size_t>(genof_[static_cast<std::size_t>(e)])];
    return exact_.emplace(e, std::move(m)).first->second;
  }

  // Spin lift along the BFS word. Lifts of the two preimages differ by sign;
  // the engine fixes the word lift and callers only use sign-stable data.
  const Clif& lift(long e) const {
    if (!has_lifts()) throw std::logic_error("instance has no lifts");
    auto it = lift_.find(e);
    if (it != lift_.end()) return it->second;
    Clif l = (e == 0) ? Clif::one(inst_.n)
                      : lift(parent_[static_cast<std::size_t>(e)]) * inst_.lifts[static_cast<std::size_t>(genof_[static_cast<std::size_t>(e)])];
    return lift_.emplace(e, std::move(l)).first->second;
  }

  const std::vector<long>& class_of() const { return class_of_; }
  const std::vector<long>& class_reps() const { return class_reps_; }
  const std::vector<long>& class_sizes() const { return class_sizes_; }
  long num_classes() const { return static_cast<long>(class_reps_.size()); }

  // Index lookup of an exact matrix; -1 when absent.
  long find_exact(const Mat<CycNum>& m) const {
    FpMat f = fp_reduce(m, map0_);
    auto it = index_.find(fp_hash(f));
    if (it == index_.end()) return -1;
    for (long cand : it->second)
      if (fp_[static_cast<std::size_t>(cand)] == f) return cand;
    return -1;
  }

  // Character with values in {+1,-1}, stored per element.
  struct Mu2Char {
    std::vector<int> gen_signs;
    std::vector<signed char> values;
    bool is_trivial() const {
      for (int s : gen_signs)
        if (s != 1) return false;
      return true;
    }
    bool operator==(const Mu2Char& o) const { return gen_signs == o.gen_signs; }
  };

  // Character with values zeta_4^k, exponents stored per element.
  struct Mu4Char {
    std::vector<int> gen_exps;  // mod 4
    std::vector<unsigned char> values;
    int order() const {
      bool has2 = false;
      for (int e : gen_exps) {
        if (e % 2 == 1) return 4;
        if (e == 2) has2 = true;
      }
      return has2 ? 2 : 1;
    }
  };

  std::vector<Mu2Char> mu2_characters() const {
    std::vector<Mu2Char> out;
    long k = num_gens();
    for (long bits = 0; bits < (1L << k); ++bits) {
      std::vector<int> signs(k);
      for (long i = 0; i < k; ++i) signs[i] = (bits >> i) & 1 ? -1 : 1;
      std::vector<signed char> vals;
      if (propagate_mu2(signs, vals)) out.push_back(Mu2Char{std::move(signs), std::move(vals)});
    }
    return out;
  }

  std::vector<Mu4Char> mu4_characters() const {
    std::vector<Mu4Char> out;
    long k = num_gens();
    long total = 1;
    for (long i = 0; i < k; ++i) total *= 4;
    for (long code = 0; code < total; ++code) {
      std::vector<int> exps(k);
      long c = code;
      for (long i = 0; i < k; ++i) {
        exps[i] = static_cast<int>(c % 4);
        c /= 4;
      }
      std::vector<unsigned char> vals;
      if (propagate_mu4(exps, vals)) out.push_back(Mu4Char{std::move(exps), std::move(vals)});
    }
    return out;
  }

  // Index-2 kernel subgroup of a nontrivial mu2 character, with Schreier
  // generators and transported lifts.
  GroupInstance kernel_instance(const Mu2Char& chi, const std::string& sub_name = "") const {
    long z = -1;
    for (long e = 0; e < size(); ++e)
      if (chi.values[static_cast<std::size_t>(e)] == -1) { z = e; break; }
    if (z < 0) throw std::logic_error("kernel_instance needs a nontrivial character");
    long zinv = inverse(z);
    GroupInstance sub;
    sub.n = inst_.n;
    sub.M = inst_.M;
    sub.name = sub_name.empty() ? inst_.name + "|ker" : sub_name;
    std::vector<long> seen;
    auto push = [&](long idx) {
      if (idx == 0) return;
      for (long s : seen)
        if (s == idx) return;
      seen.push_back(idx);
      sub.gens.push_back(exact(idx));
      if (has_lifts()) sub.lifts.push_back(lift(idx));
      sub.gen_names.push_back("k" + std::to_string(sub.gens.size() - 1));
    };
    for (long t : {0L, z}) {
      for (long i = 0; i < num_gens(); ++i) {
        long x = step(t, i);
        // Schreier generator t * g * rep(t g)^{-1}
        long idx = (chi.values[static_cast<std::size_t>(x)] == 1) ? x : product(x, zinv);
        push(idx);
      }
    }
    return sub;
  }

  // Rebuild the closure fingerprints at an independent prime and compare the
  // whole right-Cayley table.
  bool closure_consistent_at(std::uint64_t p) const {
    if (p == p0_ || (p - 1) % static_cast<std::uint64_t>(inst_.M) != 0) return false;
    FpCycMap map1(inst_.M, p);
    std::vector<FpMat> els;
    std::unordered_map<std::uint64_t, std::vector<long>> idx;
    auto find = [&](const FpMat& f) -> long {
      auto it = idx.find(fp_hash(f));
      if (it == idx.end()) return -1;
      for (long c : it->second)
        if (els[static_cast<std::size_t>(c)] == f) return c;
      return -1;
    };
    std::vector<FpMat> g1;
    for (const auto& g : inst_.gens) g1.push_back(fp_reduce(g, map1));
    els.push_back(FpMat::eye(p, inst_.n));
    idx[fp_hash(els[0])].push_back(0);
    for (std::size_t head = 0; head < els.size(); ++head) {
      for (long i = 0; i < num_gens(); ++i) {
        FpMat prod = els[head] * g1[static_cast<std::size_t>(i)];
        long found = find(prod);
        if (found < 0) {
          els.push_back(prod);
          found = static_cast<long>(els.size()) - 1;
          idx[fp_hash(prod)].push_back(found);
        }
        // must agree with the reference table index-for-index
        if (found != step(static_cast<long>(head), i)) return false;
      }
    }
    return static_cast<long>(els.size()) == size();
  }

 private:
  void bfs() {
    std::vector<FpMat> g0;
    for (const auto& g : inst_.gens) {
      if (g.rows != inst_.n || g.cols != inst_.n) throw input_error("generator shape mismatch");
      g0.push_back(fp_reduce(g, map0_));
    }
    fp_.push_back(FpMat::eye(p0_, inst_.n));
    index_[fp_hash(fp_[0])].push_back(0);
    parent_.push_back(-1);
    genof_.push_back(-1);
    for (std::size_t head = 0; head < fp_.size(); ++head) {
      step_.emplace_back(inst_.gens.size(), -1);
      for (long i = 0; i < num_gens(); ++i) {
        FpMat prod = fp_[head] * g0[static_cast<std::size_t>(i)];
        long found = -1;
        auto it = index_.find(fp_hash(prod));
        if (it != index_.end()) {
          for (long c : it->second)
            if (fp_[static_cast<std::size_t>(c)] == prod) { found = c; break; }
        }
        if (found < 0) {
          if (static_cast<long>(fp_.size()) >= max_order_)
            throw closure_exceeded("group closure exceeded max_order = " + std::to_string(max_order_));
          fp_.push_back(std::move(prod));
          found = static_cast<long>(fp_.size()) - 1;
          index_[fp_hash(fp_.back())].push_back(found);
          parent_.push_back(static_cast<long>(head));
          genof_.push_back(i);
        }
        step_[head][static_cast<std::size_t>(i)] = found;
      }
    }
  }

  std::vector<long> word(long e) const {
    std::vector<long> w;
    while (e != 0) {
      w.push_back(genof_[static_cast<std::size_t>(e)]);
      e = parent_[static_cast<std::size_t>(e)];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  void find_classes() {
    long N = size();
    class_of_.assign(N, -1);
    std::vector<long> gidx, ginv;
    for (long i = 0; i < num_gens(); ++i) {
      gidx.push_back(gen_index(i));
      ginv.push_back(inverse(gen_index(i)));
    }
    for (long e = 0; e < N; ++e) {
      if (class_of_[static_cast<std::size_t>(e)] >= 0) continue;
      long cls = static_cast<long>(class_reps_.size());
      class_reps_.push_back(e);
      std::vector<long> orbit = {e};
      class_of_[static_cast<std::size_t>(e)] = cls;
      for (std::size_t h = 0; h < orbit.size(); ++h) {
        for (long i = 0; i < num_gens(); ++i) {
          long c = product(product(gidx[static_cast<std::size_t>(i)], orbit[h]), ginv[static_cast<std::size_t>(i)]);
          if (class_of_[static_cast<std::size_t>(c)] < 0) {
            class_of_[static_cast<std::size_t>(c)] = cls;
            orbit.push_back(c);
          }
        }
      }
      class_sizes_.push_back(static_cast<long>(orbit.size()));
    }
  }

  bool propagate_mu2(const std::vector<int>& signs, std::vector<signed char>& vals) const {
    long N = size();
    vals.assign(N, 0);
    vals[0] = 1;
    for (long e = 0; e < N; ++e) {
      if (e != 0) {
        long p = parent_[static_cast<std::size_t>(e)];
        vals[static_cast<std::size_t>(e)] =
            static_cast<signed char>(vals[static_cast<std::size_t>(p)] * signs[static_cast<std::size_t>(genof_[static_cast<std::size_t>(e)])]);
      }
    }
    for (long e = 0; e < N; ++e)
      for (long i = 0; i < num_gens(); ++i)
        if (vals[static_cast<std::size_t>(step(e, i))] !=
            vals[static_cast<std::size_t>(e)] * signs[static_cast<std::size_t>(i)])
          return false;
    return true;
  }

  bool propagate_mu4(const std::vector<int>& exps, std::vector<unsigned char>& vals) const {
    long N = size();
    vals.assign(N, 0);
    for (long e = 1; e < N; ++e) {
      long p = parent_[static_cast<std::size_t>(e)];
      vals[static_cast<std::size_t>(e)] = static_cast<unsigned char>(
          (vals[static_cast<std::size_t>(p)] + exps[static_cast<std::size_t>(genof_[static_cast<std::size_t>(e)])]) % 4);
    }
    for (long e = 0; e < N; ++e)
      for (long i = 0; i < num_gens(); ++i)
        if (vals[static_cast<std::size_t>(step(e, i))] !=
            (vals[static_cast<std::size_t>(e)] + exps[static_cast<std::size_t>(i)]) % 4)
          return false;
    return true;
  }

  GroupInstance inst_;
  long max_order_;
  std::uint64_t p0_;
  FpCycMap map0_;
  std::vector<FpMat> fp_;
  std::unordered_map<std::uint64_t, std::vector<long>> index_;
  std::vector<long> parent_, genof_;
  std::vector<std::vector<long>> step_;
  std::vector<long> class_of_, class_reps_, class_sizes_;
  mutable std::unordered_map<long, Mat<CycNum>> exact_;
  mutable std::unordered_map<long, Clif> lift_;
};

// Quotient detectors used by the structural invariants.
inline bool has_klein_quotient(const ClosedGroup& G) { return G.mu2_characters().size() >= 4; }
inline bool has_z2_cubed_quotient(const ClosedGroup& G) { return G.mu2_characters().size() >= 8; }

inline bool has_z2_z4_quotient(const ClosedGroup& G) {
  auto mu4 = G.mu4_characters();
  auto mu2 = G.mu2_characters();
  for (const auto& c : mu4) {
    if (c.order() != 4) continue;
    // c^2 as a sign character
    std::vector<int> csq(c.gen_exps.size());
    for (std::size_t i = 0; i < csq.size(); ++i) csq[i] = (c.gen_exps[i] % 2 == 1) ? -1 : 1;
    for (const auto& chi : mu2) {
      if (chi.is_trivial()) continue;
      bool equal_csq = true;
      for (std::size_t i = 0; i < csq.size(); ++i)
        if (chi.gen_signs[i] != csq[i]) { equal_csq = false; break; }
      if (!equal_csq) return true;
    }
  }
  return false;
}

}  // namespace spinacc
