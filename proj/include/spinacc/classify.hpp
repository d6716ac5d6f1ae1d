#pragma once
// Classification of unacceptable sign characters relative to the characters
// carried by invariant lines, for groups acting on seven coordinates.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "spinacc/acceptability.hpp"

namespace spinacc {

// Verdict for one unacceptable character eta against one invariant-line
// character chi, computed on the index-two kernel of chi.
struct ChiVerdict {
  ClosedGroup::Mu2Char chi;
  std::vector<int> eta_restriction;   // eta on the kernel generators
  bool restriction_in_sub_x = false;  // restriction lies in the kernel's obstruction subgroup
  bool type_ii = false;
  bool type_iii = false;
  bool type_iiia = false;  // complement = plane with determinant chi + induced plane
  bool type_iiib = false;  // complement = induced three-dimensional piece
};

struct EtaClassification {
  ClosedGroup::Mu2Char eta;
  bool type_i = false;  // the trivial character carries an invariant line
  std::vector<ChiVerdict> chi_verdicts;  // one per nontrivial invariant-line character
};

struct ClassificationReport {
  std::vector<EtaClassification> etas;  // one per unacceptable character
};

class Classifier {
 public:
  explicit Classifier(const Acceptability& acc, std::uint64_t seed = 1)
      : acc_(acc), G_(acc.group()), seed_(seed) {
    build();
  }

  const ClassificationReport& report() const { return rep_; }

 private:
  // One isotypic piece available to a sub-multiset search.
  struct Piece {
    long dim = 0;
    long count = 0;
    std::vector<std::uint64_t> det;  // determinant per generator
    std::vector<std::uint64_t> chi;  // character value per class
  };

  struct SubtypeResult {
    bool iiia = false;
    bool iiib = false;
  };

  void build() {
    const AcceptabilityReport& R = acc_.report();
    for (const auto& line : R.y_set)
      if (line.chi.is_trivial()) type_i_ = true;
    for (const auto& eta : R.e_set) {
      EtaClassification ec;
      ec.eta = eta;
      ec.type_i = type_i_;
      rep_.etas.push_back(std::move(ec));
    }
    for (const auto& line : R.y_set)
      if (!line.chi.is_trivial()) process_chi(line.chi);
  }

  void process_chi(const ClosedGroup::Mu2Char& chi) {
    GroupInstance inst = G_.kernel_instance(chi);
    inst.lifts.clear();  // classification never consults the double cover
    ClosedGroup sub(inst);
    if (sub.size() * 2 != G_.size()) throw std::logic_error("character kernel has wrong index");
    ModRep m1(sub, acc_.report().p1, seed_);
    ModRep m2(sub, acc_.report().p2, seed_);
    if (m1.shape() != m2.shape()) throw bad_prime("kernel decomposition shapes disagree");

    // obstruction subgroup of the restricted action
    std::vector<std::vector<int>> xg;
    for (const auto& c : m1.constituents())
      if (c.fs == 1) xg.push_back(c.det_signs);
    auto xv = detail::sign_group_closure(std::move(xg), sub.num_gens());
    {
      long hit = 0;
      for (const auto& c : sub.mu2_characters())
        if (std::find(xv.begin(), xv.end(), c.gen_signs) != xv.end()) ++hit;
      if (hit != static_cast<long>(xv.size()))
        throw std::logic_error("a kernel determinant pattern does not define a character");
    }

    std::vector<long> gen_in_g;
    for (std::size_t i = 0; i < inst.gens.size(); ++i) {
      long e = G_.find_exact(inst.gens[i]);
      if (e < 0) throw std::logic_error("kernel generator missing from the parent group");
      gen_in_g.push_back(e);
    }

    // transfer of parent classes into the kernel, through a fixed odd element
    long z = -1;
    for (long e = 0; e < G_.size(); ++e)
      if (chi.values[static_cast<std::size_t>(e)] == -1) {
        z = e;
        break;
      }
    long zinv = G_.inverse(z);
    long nc = G_.num_classes();
    std::vector<int> csign(static_cast<std::size_t>(nc));
    std::vector<long> s0(static_cast<std::size_t>(nc), -1), s1(static_cast<std::size_t>(nc), -1);
    for (long c = 0; c < nc; ++c) {
      long e = G_.class_reps()[static_cast<std::size_t>(c)];
      csign[static_cast<std::size_t>(c)] = chi.values[static_cast<std::size_t>(e)];
      if (csign[static_cast<std::size_t>(c)] == 1) {
        long inside = sub.find_exact(G_.exact(e));
        long conj = sub.find_exact(G_.exact(G_.product(G_.product(zinv, e), z)));
        if (inside < 0 || conj < 0) throw std::logic_error("kernel class transfer failed");
        s0[static_cast<std::size_t>(c)] = sub.class_of()[static_cast<std::size_t>(inside)];
        s1[static_cast<std::size_t>(c)] = sub.class_of()[static_cast<std::size_t>(conj)];
      }
    }

    for (auto& ec : rep_.etas) {
      ChiVerdict v;
      v.chi = chi;
      for (long e : gen_in_g)
        v.eta_restriction.push_back(ec.eta.values[static_cast<std::size_t>(e)]);
      v.restriction_in_sub_x = std::find(xv.begin(), xv.end(), v.eta_restriction) != xv.end();
      v.type_ii = !v.restriction_in_sub_x;
      v.type_iii = !type_i_ && v.restriction_in_sub_x;
      // the two subtype shapes, a plane plus an induced plane and an induced
      // three-dimensional piece, only partition a six-dimensional complement
      if (v.type_iii && G_.n() == 7) {
        SubtypeResult r1 = subtype_search(acc_.modrep(), m1, chi, v.eta_restriction, csign, s0, s1);
        SubtypeResult r2 = subtype_search(acc_.modrep_second(), m2, chi, v.eta_restriction, csign, s0, s1);
        if (r1.iiia != r2.iiia || r1.iiib != r2.iiib)
          throw bad_prime("subtype searches disagree between primes");
        v.type_iiia = r1.iiia;
        v.type_iiib = r1.iiib;
      }
      ec.chi_verdicts.push_back(std::move(v));
    }
  }

  // All ways to pick a sub-multiset of pieces with total dimension `target`.
  static void selections_rec(const std::vector<Piece>& ps, long target, std::size_t at, long have,
                             std::vector<long>& take, std::vector<std::vector<long>>& out) {
    if (have == target) {
      out.push_back(take);
      return;
    }
    if (at == ps.size()) return;
    for (long t = 0; t <= ps[at].count && have + t * ps[at].dim <= target; ++t) {
      take[at] = t;
      selections_rec(ps, target, at + 1, have + t * ps[at].dim, take, out);
    }
    take[at] = 0;
  }

  static std::vector<std::vector<long>> selections(const std::vector<Piece>& ps, long target) {
    std::vector<std::vector<long>> out;
    std::vector<long> take(ps.size(), 0);
    selections_rec(ps, target, 0, 0, take, out);
    return out;
  }

  SubtypeResult subtype_search(const ModRep& gm, const ModRep& sm, const ClosedGroup::Mu2Char& chi,
                               const std::vector<int>& eta_sub, const std::vector<int>& csign,
                               const std::vector<long>& s0, const std::vector<long>& s1) const {
    std::uint64_t p = gm.p();
    long nc = static_cast<long>(csign.size());
    long sc = sm.group().num_classes();

    // complement pieces on the parent side, with one invariant line removed
    std::vector<Piece> fg;
    bool removed = false;
    for (const auto& c : gm.constituents()) {
      Piece q{c.dim, c.mult, c.det_gen, c.chi};
      if (!removed && c.dim == 1 && c.fs == 1 && c.det_signs == chi.gen_signs) {
        --q.count;
        removed = true;
      }
      if (q.count > 0) fg.push_back(std::move(q));
    }
    if (!removed) throw std::logic_error("invariant line is not a constituent");

    // complement pieces on the kernel side, with one trivial line removed
    std::vector<Piece> fs;
    removed = false;
    for (const auto& c : sm.constituents()) {
      bool trivial = c.dim == 1 &&
                     std::all_of(c.chi.begin(), c.chi.end(), [](std::uint64_t v) { return v == 1; });
      Piece q{c.dim, c.mult, c.det_gen, c.chi};
      if (!removed && trivial) {
        --q.count;
        removed = true;
      }
      if (q.count > 0) fs.push_back(std::move(q));
    }
    if (!removed) throw std::logic_error("restricted invariant line is not a constituent");

    std::vector<std::uint64_t> char_f(static_cast<std::size_t>(nc));
    const auto& chi_e = gm.defining_character();
    for (long c = 0; c < nc; ++c) {
      std::uint64_t cv = csign[static_cast<std::size_t>(c)] == 1 ? 1 : p - 1;
      char_f[static_cast<std::size_t>(c)] = fp_sub(chi_e[static_cast<std::size_t>(c)], cv, p);
    }

    auto det_matches = [p](const std::vector<Piece>& ps, const std::vector<long>& take,
                           const std::vector<int>& signs) {
      std::vector<std::uint64_t> d(signs.size(), 1);
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (long t = 0; t < take[i]; ++t)
          for (std::size_t j = 0; j < d.size(); ++j) d[j] = fp_mul(d[j], ps[i].det[j], p);
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] != (signs[j] == 1 ? 1 : p - 1)) return false;
      return true;
    };
    auto char_sum = [p](const std::vector<Piece>& ps, const std::vector<long>& take, long classes) {
      std::vector<std::uint64_t> s(static_cast<std::size_t>(classes), 0);
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (long c = 0; c < classes; ++c)
          s[static_cast<std::size_t>(c)] =
              fp_add(s[static_cast<std::size_t>(c)],
                     fp_mul(static_cast<std::uint64_t>(take[i]), ps[i].chi[static_cast<std::size_t>(c)], p),
                     p);
      return s;
    };
    auto induced_matches = [&](const std::vector<std::uint64_t>& psi,
                               const std::vector<std::uint64_t>& target) {
      for (long c = 0; c < nc; ++c) {
        std::uint64_t v = csign[static_cast<std::size_t>(c)] == -1
                              ? 0
                              : fp_add(psi[static_cast<std::size_t>(s0[static_cast<std::size_t>(c)])],
                                       psi[static_cast<std::size_t>(s1[static_cast<std::size_t>(c)])], p);
        if (v != target[static_cast<std::size_t>(c)]) return false;
      }
      return true;
    };

    SubtypeResult out;
    for (const auto& t3 : selections(fs, 3)) {
      if (!det_matches(fs, t3, eta_sub)) continue;
      if (induced_matches(char_sum(fs, t3, sc), char_f)) {
        out.iiib = true;
        break;
      }
    }
    std::vector<std::vector<long>> planes;
    for (const auto& t2 : selections(fs, 2))
      if (det_matches(fs, t2, eta_sub)) planes.push_back(t2);
    if (!planes.empty()) {
      for (const auto& q : selections(fg, 2)) {
        if (out.iiia) break;
        if (!det_matches(fg, q, chi.gen_signs)) continue;
        auto char_q = char_sum(fg, q, nc);
        std::vector<std::uint64_t> target(static_cast<std::size_t>(nc));
        for (long c = 0; c < nc; ++c)
          target[static_cast<std::size_t>(c)] =
              fp_sub(char_f[static_cast<std::size_t>(c)], char_q[static_cast<std::size_t>(c)], p);
        for (const auto& t2 : planes)
          if (induced_matches(char_sum(fs, t2, sc), target)) {
            out.iiia = true;
            break;
          }
      }
    }
    return out;
  }

  const Acceptability& acc_;
  const ClosedGroup& G_;
  std::uint64_t seed_;
  bool type_i_ = false;
  ClassificationReport rep_;
};

}  // namespace spinacc
