#pragma once

// Self-contained verification sweep over the shipped instance corpus. Each
// check re-derives one headline property from scratch and reports pass or
// fail with a short line of evidence; the CLI and the acceptance binary both
// drive this list.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinacc/acceptability.hpp"
#include "spinacc/classify.hpp"
#include "spinacc/clifford.hpp"
#include "spinacc/constructions.hpp"
#include "spinacc/gspin.hpp"
#include "spinacc/induction.hpp"

namespace spinacc {

struct CheckResult {
  std::string id;
  bool pass = false;
  double millis = 0;
  std::string detail;
};

namespace checks_detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline ClosedGroup::Mu2Char find_char(const ClosedGroup& G, const std::vector<int>& signs) {
  for (const auto& ch : G.mu2_characters())
    if (ch.gen_signs == signs) return ch;
  throw std::logic_error("no order-two character with the requested generator signs");
}

inline std::set<std::vector<int>> sign_set(const std::vector<ClosedGroup::Mu2Char>& chars) {
  std::set<std::vector<int>> out;
  for (const auto& ch : chars) out.insert(ch.gen_signs);
  return out;
}

inline std::vector<int> pointwise(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  return c;
}

// Random element of Spin(A,B): a product of vector pairs, each pair drawn
// from one block. Vectors are exact unit vectors: coordinate basis vectors,
// swap units, or rotor-style cos/sin combinations.
inline Clif random_spin_element(long n, long a, std::mt19937_64& rng, long M = 24) {
  auto unit_in = [&](long lo, long hi) -> Clif {
    long span = hi - lo;
    int kind = static_cast<int>(rng() % 3);
    if (span < 2) kind = 0;
    if (kind == 0) return Clif::basis_vector(n, lo + static_cast<long>(rng() % span));
    long i = lo + static_cast<long>(rng() % span);
    long j = lo + static_cast<long>(rng() % span);
    while (j == i) j = lo + static_cast<long>(rng() % span);
    if (kind == 1) return swap_unit(n, i, j, M);
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
    g = g * unit_in(lo, hi) * unit_in(lo, hi);
  }
  return g;
}

inline std::vector<CycNum> unit_vec(long n, long i) {
  std::vector<CycNum> v(static_cast<std::size_t>(n), CycNum(0));
  v[static_cast<std::size_t>(i)] = CycNum(1);
  return v;
}

inline std::vector<CycNum> two_coord(long n, long i, long ci, long j, long cj) {
  std::vector<CycNum> v(static_cast<std::size_t>(n), CycNum(0));
  v[static_cast<std::size_t>(i)] = CycNum(static_cast<int>(ci));
  v[static_cast<std::size_t>(j)] = CycNum(static_cast<int>(cj));
  return v;
}

inline Mat<CycNum> double_rotation(long M) {
  return rotation_block(5, 0, 1, M, 1, 3) * rotation_block(5, 2, 3, M, 1, 3);
}

inline Mat<CycNum> quarter_turn_swap(long M) {
  return rotation_block(5, 0, 2, M, 1, 4) * rotation_block(5, 1, 3, M, 1, 4);
}

inline Mat<CycNum> plain_swap() { return permutation_matrix({2, 3, 0, 1, 4}); }

inline Mat<CycNum> tilted_swap(long M) {
  auto [c, s] = cos_sin(M, 1, 8);
  Mat<CycNum> z = Mat<CycNum>::eye(5);
  z.at(0, 0) = c;
  z.at(0, 2) = s;
  z.at(2, 0) = s;
  z.at(2, 2) = CycNum(0) - c;
  z.at(1, 1) = c;
  z.at(1, 3) = s;
  z.at(3, 1) = s;
  z.at(3, 3) = CycNum(0) - c;
  return z;
}

inline GroupInstance dihedral_with_swap(long M, const Mat<CycNum>& swap) {
  GroupInstance inst;
  inst.n = 5;
  inst.M = M;
  inst.gens = {double_rotation(M), flips_matrix(5, {1, 3}), swap};
  inst.gen_names = {"a", "b", "z"};
  return inst;
}

inline GroupInstance klein_with_swap() {
  GroupInstance inst;
  inst.n = 5;
  inst.M = 4;
  inst.gens = {diag_signs({1, -1, 1, -1, 1}), plain_swap()};
  inst.gen_names = {"s", "z"};
  return inst;
}

}  // namespace checks_detail

class CorpusChecks {
 public:
  explicit CorpusChecks(std::uint64_t seed = 1) : seed_(seed) {}

  static const std::vector<std::string>& ids() {
    static const std::vector<std::string> all = {
        "example-one",      "family-trichotomy", "conjugation-identity", "element-routes",
        "obstruction-structure", "subtype-examples",  "embedding",            "small-rank",
        "scalar-extension", "induction-identities", "prime-independence"};
    return all;
  }

  CheckResult run_one(const std::string& id) {
    CheckResult out;
    out.id = id;
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    try {
      if (id == "example-one") out.pass = check_example_one(detail);
      else if (id == "family-trichotomy") out.pass = check_family_trichotomy(detail);
      else if (id == "conjugation-identity") out.pass = check_conjugation_identity(detail);
      else if (id == "element-routes") out.pass = check_element_routes(detail);
      else if (id == "obstruction-structure") out.pass = check_obstruction_structure(detail);
      else if (id == "subtype-examples") out.pass = check_subtype_examples(detail);
      else if (id == "embedding") out.pass = check_embedding(detail);
      else if (id == "small-rank") out.pass = check_small_rank(detail);
      else if (id == "scalar-extension") out.pass = check_scalar_extension(detail);
      else if (id == "induction-identities") out.pass = check_induction_identities(detail);
      else if (id == "prime-independence") out.pass = check_prime_independence(detail);
      else throw input_error("unknown check id: " + id);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception& e) {
      out.pass = false;
      detail << "exception: " << e.what();
    }
    out.millis = checks_detail::elapsed_ms(t0);
    out.detail = detail.str();
    return out;
  }

  std::vector<CheckResult> run(const std::string& only = "") {
    std::vector<CheckResult> out;
    for (const auto& id : ids()) {
      if (!only.empty() && id != only) continue;
      out.push_back(run_one(id));
    }
    if (!only.empty() && out.empty()) throw input_error("unknown check id: " + only);
    return out;
  }

 private:
  struct Entry {
    std::unique_ptr<ClosedGroup> group;
    std::unique_ptr<Acceptability> acc;
    std::unique_ptr<ClassificationReport> cls;
  };

  Entry& entry(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.group = std::make_unique<ClosedGroup>(parse_instance(spec));
    e.acc = std::make_unique<Acceptability>(*e.group, seed_);
    return cache_.emplace(spec, std::move(e)).first->second;
  }

  const ClassificationReport& classification(const std::string& spec) {
    Entry& e = entry(spec);
    if (!e.cls) {
      Classifier cls(*e.acc, seed_);
      e.cls = std::make_unique<ClassificationReport>(cls.report());
    }
    return *e.cls;
  }

  // Fail-collecting helper: appends the message and clears the flag.
  static void fail(bool& ok, std::ostringstream& detail, const std::string& msg) {
    if (ok) {
      ok = false;
    } else {
      detail << "; ";
    }
    detail << msg;
  }

  // The eight-element two-generator instance: unacceptable of the invariant
  // line kind, with the frozen obstruction and stable-line data, inside the
  // time budget.
  bool check_example_one(std::ostringstream& detail) {
    auto t0 = std::chrono::steady_clock::now();
    ClosedGroup g(parse_instance("example1"));
    Acceptability acc(g, seed_);
    Classifier cls(acc, seed_);
    ClassificationReport crep = cls.report();
    double ms = checks_detail::elapsed_ms(t0);
    const auto& rep = acc.report();

    bool ok = true;
    if (rep.acceptable) fail(ok, detail, "expected an unacceptable verdict");
    std::set<std::vector<int>> want_x = {{1, 1}, {-1, -1}};
    std::set<std::vector<int>> want_e = {{-1, 1}, {1, -1}};
    if (checks_detail::sign_set(rep.x_set) != want_x) fail(ok, detail, "obstruction subgroup differs from the frozen set");
    if (checks_detail::sign_set(rep.e_set) != want_e) fail(ok, detail, "unacceptable characters differ from the frozen set");
    std::map<std::vector<int>, long> mults;
    for (const auto& line : rep.y_set) mults[line.chi.gen_signs] = line.mult;
    std::map<std::vector<int>, long> want_y = {{{1, 1}, 1}, {{-1, -1}, 2}};
    if (mults != want_y) fail(ok, detail, "stable-line multiplicities differ from the frozen table");

    // the unacceptable set is one coset of the obstruction subgroup
    if (!rep.e_set.empty()) {
      std::set<std::vector<int>> coset;
      for (const auto& x : rep.x_set)
        coset.insert(checks_detail::pointwise(rep.e_set[0].gen_signs, x.gen_signs));
      if (coset != checks_detail::sign_set(rep.e_set)) fail(ok, detail, "unacceptable set is not one coset");
    }
    if (crep.etas.size() != rep.e_set.size()) fail(ok, detail, "classification misses an unacceptable character");
    for (const auto& ec : crep.etas)
      if (!ec.type_i) fail(ok, detail, "expected the invariant-line classification");
    if (ms >= 5000) fail(ok, detail, "exceeded the five second budget");
    if (ok) detail << "frozen verdict, obstruction set, multiplicities, and classification in " << static_cast<long>(ms) << "ms";
    return ok;
  }

  // The three-member family: two acceptable instances and one unacceptable
  // at matching parameters, inside the time budget.
  bool check_family_trichotomy(std::ostringstream& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& [spec, want] : std::vector<std::pair<std::string, bool>>{
             {"h1:4", true}, {"h2:4", true}, {"h3:4", false}}) {
      ClosedGroup g(parse_instance(spec));
      Acceptability acc(g, seed_);
      if (acc.report().acceptable != want)
        fail(ok, detail, spec + (want ? " should be acceptable" : " should be unacceptable"));
    }
    double ms = checks_detail::elapsed_ms(t0);
    if (ms >= 5000) fail(ok, detail, "exceeded the five second budget");
    if (ok) detail << "h1 and h2 acceptable, h3 unacceptable in " << static_cast<long>(ms) << "ms";
    return ok;
  }

  // Conjugation by the block volume element scales a split-preserving spin
  // element by the block determinant character, exactly.
  bool check_conjugation_identity(std::ostringstream& detail) {
    std::mt19937_64 rng(seed_ * 0x9e3779b97f4a7c15ull + 3);
    bool ok = true;
    long total = 0;
    for (long a : {1L, 3L, 5L}) {
      Clif z = z_B(7, a);
      Clif zinv = pin_inverse(z);
      for (int trial = 0; trial < 40; ++trial) {
        Clif g = checks_detail::random_spin_element(7, a, rng);
        CycNum k = kappa(g, a);
        if (!(k == CycNum(1) || k == CycNum(-1))) {
          fail(ok, detail, "block determinant escaped the sign group");
          continue;
        }
        if (!(z * g * zinv == k * g)) fail(ok, detail, "conjugation identity failed at split " + std::to_string(a));
        ++total;
      }
    }
    if (total < 100) fail(ok, detail, "fewer than one hundred samples");
    if (ok) detail << total << " exact conjugations across splits 1+6, 3+4, 5+2";
    return ok;
  }

  // The element condition computed three ways: per-class eigenvalue test,
  // truncated exterior-power sum, and the spin character.
  bool check_element_routes(std::ostringstream& detail) {
    bool ok = true;
    long checked = 0;
    for (const auto& spec : default_corpus()) {
      Entry& e = entry(spec);
      U1Context ctx(*e.group);
      for (const auto& v : e.acc->report().verdicts) {
        bool r1 = v.u1;
        bool r2 = ctx.route_eigen(v.eta);
        bool r3 = ctx.route_exterior(v.eta);
        bool r4 = e.group->has_lifts() ? ctx.route_spin(v.eta) : r1;
        if (r1 != r2 || r1 != r3 || r1 != r4) fail(ok, detail, "routes disagree on " + spec);
        ++checked;
      }
    }
    if (ok) detail << checked << " characters, three routes each, all in agreement";
    return ok;
  }

  // Group-level invariants of every corpus verdict: frozen closure orders
  // and verdicts, and for the unacceptable ones the coset structure of the
  // unacceptable set and the invariant-line criterion.
  bool check_obstruction_structure(std::ostringstream& detail) {
    static const std::vector<std::tuple<std::string, long, bool>> frozen = {
        {"trivial:7", 1, true},       {"example1", 8, false},       {"gcal:3", 36, false},
        {"gcal:4", 32, false},        {"h1:4", 8, true},            {"h2:4", 16, true},
        {"h3:4", 16, false},          {"gprime:4,+1", 64, false},   {"gprime:4,-1", 64, false},
        {"hcal:3", 108, false},       {"ical:a4", 576, false},      {"ical:s4", 2304, false},
        {"ical:dihedral,3", 144, false}, {"weil1:3,4", 576, false}, {"weil3a:3,3,4", 144, false},
        {"embed:9:example1", 8, false},  {"signed_cycle", 448, true}, {"d8mu2", 16, false}};
    bool ok = true;
    if (frozen.size() != default_corpus().size()) fail(ok, detail, "frozen table out of step with the corpus");
    long unacceptable = 0;
    for (const auto& [spec, order, acceptable] : frozen) {
      Entry& e = entry(spec);
      const auto& rep = e.acc->report();
      if (e.group->size() != order) fail(ok, detail, spec + ": closure order drifted");
      if (rep.acceptable != acceptable) fail(ok, detail, spec + ": verdict drifted");
      if (rep.acceptable) continue;
      ++unacceptable;

      if (rep.y_set.empty()) fail(ok, detail, spec + ": no stable lines despite unacceptability");
      if (e.group->mu2_characters().size() < 4) fail(ok, detail, spec + ": sign-character group too small");

      auto xs = checks_detail::sign_set(rep.x_set);
      auto es = checks_detail::sign_set(rep.e_set);
      std::vector<int> triv(static_cast<std::size_t>(e.group->num_gens()), 1);
      if (es.count(triv)) fail(ok, detail, spec + ": trivial character marked unacceptable");
      for (const auto& s : es)
        if (xs.count(s)) fail(ok, detail, spec + ": unacceptable character inside the obstruction subgroup");
      std::set<std::vector<int>> coset;
      for (const auto& x : xs) coset.insert(checks_detail::pointwise(rep.e_set[0].gen_signs, x));
      if (coset != es) fail(ok, detail, spec + ": unacceptable set is not one obstruction coset");

      for (const auto& v : rep.verdicts) {
        bool in_e = es.count(v.eta.gen_signs) > 0;
        if (in_e != (v.u1 && !v.in_x)) fail(ok, detail, spec + ": verdict flags inconsistent");
      }

      bool trivial_line = false;
      for (const auto& line : rep.y_set)
        if (line.chi.gen_signs == triv) trivial_line = true;
      for (const auto& ec : classification(spec).etas)
        if (ec.type_i != trivial_line) fail(ok, detail, spec + ": invariant-line criterion flag drifted");
    }
    if (ok) detail << frozen.size() << " instances at frozen orders, " << unacceptable
                   << " unacceptable with coset structure intact";
    return ok;
  }

  // The documented subtype landscape: plane-plus-induced-plane, induced
  // three-dimensional piece, and the kernel-escape kind on a discrete image.
  bool check_subtype_examples(std::ostringstream& detail) {
    bool ok = true;

    auto verdict_for = [](const EtaClassification& ec, const std::vector<int>& signs) -> const ChiVerdict* {
      for (const auto& v : ec.chi_verdicts)
        if (v.chi.gen_signs == signs) return &v;
      return nullptr;
    };

    {
      const auto& rep = classification("hcal:3");
      if (rep.etas.size() != 2) fail(ok, detail, "hcal:3: expected two unacceptable characters");
      for (const auto& ec : rep.etas) {
        if (ec.type_i) fail(ok, detail, "hcal:3: unexpected invariant line");
        const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, -1});
        if (v == nullptr || !v->type_iii || !v->type_iiia || v->type_iiib)
          fail(ok, detail, "hcal:3: expected the plane-plus-induced-plane subtype");
      }
    }
    for (const std::string spec : {"ical:a4", "ical:s4"}) {
      const auto& rep = classification(spec);
      if (rep.etas.size() != 2) fail(ok, detail, spec + ": expected two unacceptable characters");
      for (const auto& ec : rep.etas) {
        if (ec.type_i) fail(ok, detail, spec + ": unexpected invariant line");
        const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, 1, -1});
        if (v == nullptr || !v->type_iii || !v->type_iiib || v->type_iiia)
          fail(ok, detail, spec + ": expected the induced three-dimensional subtype");
      }
    }
    for (const std::string spec : {"gprime:4,+1", "gprime:4,-1"}) {
      const auto& rep = classification(spec);
      if (!entry(spec).acc->report().discrete) fail(ok, detail, spec + ": image should be discrete");
      if (rep.etas.size() != 4) fail(ok, detail, spec + ": expected four unacceptable characters");
      for (const auto& ec : rep.etas) {
        if (ec.type_i) fail(ok, detail, spec + ": unexpected invariant line");
        const ChiVerdict* v = verdict_for(ec, {1, 1, 1, 1, -1});
        if (v == nullptr || !v->type_ii || v->type_iii)
          fail(ok, detail, spec + ": expected the kernel-escape subtype");
      }
    }
    if (ok) detail << "subtype verdicts match on hcal:3, ical:a4, ical:s4, and both gprime forms";
    return ok;
  }

  // Padding into a larger odd rank changes neither the verdict nor the
  // obstruction data, and the padded trivial instance stays acceptable.
  bool check_embedding(std::ostringstream& detail) {
    bool ok = true;
    const auto& base = entry("example1").acc->report();
    const auto& padded = entry("embed:9:example1").acc->report();
    if (padded.acceptable) fail(ok, detail, "padded instance became acceptable");
    if (checks_detail::sign_set(base.x_set) != checks_detail::sign_set(padded.x_set))
      fail(ok, detail, "obstruction subgroup changed under padding");
    if (checks_detail::sign_set(base.e_set) != checks_detail::sign_set(padded.e_set))
      fail(ok, detail, "unacceptable set changed under padding");
    ClosedGroup gt(parse_instance("embed:9:trivial:7"));
    Acceptability at(gt, seed_);
    if (!at.report().acceptable) fail(ok, detail, "padded trivial instance became unacceptable");
    if (ok) detail << "verdict and obstruction data stable from rank seven to rank nine";
    return ok;
  }

  // Randomized closed subgroups in ranks three and five are all acceptable.
  bool check_small_rank(std::ostringstream& detail) {
    bool ok = true;
    long count = 0;
    for (long n : {3L, 5L}) {
      for (std::uint64_t i = 0; i < 25; ++i) {
        GroupInstance inst = random_small_n(n, seed_, i);
        ClosedGroup g(inst);
        Acceptability acc(g, seed_);
        if (!acc.report().e_set.empty())
          fail(ok, detail, "rank " + std::to_string(n) + " sample " + std::to_string(i) + " unacceptable");
        ++count;
      }
    }
    if (count < 50) fail(ok, detail, "fewer than fifty samples");
    if (ok) detail << count << " randomized closed subgroups, all acceptable";
    return ok;
  }

  // Scalar-tagged extensions decide acceptability through the spin part of
  // the fiber-product cover; the verdicts must match the untagged instance.
  bool check_scalar_extension(std::ostringstream& detail) {
    bool ok = true;
    long tags_total = 0, runs_total = 0;
    for (const auto& spec : default_corpus()) {
      Entry& e = entry(spec);
      if (e.group->M() % 4 != 0) {
        fail(ok, detail, spec + ": no fourth root of unity for scalar tags");
        continue;
      }
      auto tags = sample_scalar_twists(*e.group, 20, seed_ + 11);
      tags_total += static_cast<long>(tags.size());
      std::set<std::vector<long>> distinct(tags.begin(), tags.end());
      GSpinEngine eng(*e.group, seed_);
      for (const auto& tag : distinct) {
        GSpinVerdict v = eng.run(tag);
        if (v.gspin_acceptable != v.spin_acceptable)
          fail(ok, detail, spec + ": extension verdict differs from the spin-part verdict");
        if (v.spin_acceptable != e.acc->report().acceptable)
          fail(ok, detail, spec + ": spin-part verdict differs from the cached verdict");
        if (!v.cover.two_to_one) fail(ok, detail, spec + ": cover is not a double cover");
        ++runs_total;
      }
      if (tags.size() < 20) fail(ok, detail, spec + ": fewer than twenty sampled tags");
    }
    if (ok) detail << tags_total << " sampled tags over the corpus, " << runs_total
                   << " distinct covers run, verdicts all match";
    return ok;
  }

  // Determinant-of-induction identity across every index-two pair in the
  // corpus, plus exact orthogonal splits over the documented branch shapes.
  bool check_induction_identities(std::ostringstream& detail) {
    namespace cd = checks_detail;
    bool ok = true;
    long pairs = 0, constituents = 0;
    for (const auto& spec : default_corpus()) {
      Entry& e = entry(spec);
      GallagherReport rep = det_induction_check(*e.group, seed_);
      if (!rep.holds) fail(ok, detail, spec + ": determinant identity failed");
      pairs += rep.pairs;
      constituents += rep.constituents;
    }

    struct Fixture {
      std::string label;
      GroupInstance inst;
      std::vector<int> chi;
      std::vector<std::vector<CycNum>> v0;
      SplitBranch branch;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"aligned", cd::klein_with_swap(), {1, -1},
                        {cd::unit_vec(5, 0), cd::unit_vec(5, 1)}, SplitBranch::aligned});
    fixtures.push_back({"distinct", parse_instance("hcal:3"), {1, 1, 1, 1, -1},
                        {cd::unit_vec(7, 1), cd::unit_vec(7, 2)}, SplitBranch::distinct_pieces});
    fixtures.push_back({"quarter-turn", cd::dihedral_with_swap(12, cd::quarter_turn_swap(12)), {1, 1, -1},
                        {cd::unit_vec(5, 0), cd::unit_vec(5, 1)}, SplitBranch::quarter_turn});
    fixtures.push_back({"rational-axis", cd::dihedral_with_swap(12, cd::plain_swap()), {1, 1, -1},
                        {cd::two_coord(5, 0, 1, 2, 2), cd::two_coord(5, 1, 1, 3, 2)}, SplitBranch::reflection_axis});
    fixtures.push_back({"radical-axis", cd::dihedral_with_swap(24, cd::tilted_swap(24)), {1, 1, -1},
                        {cd::unit_vec(5, 0), cd::unit_vec(5, 1)}, SplitBranch::reflection_axis});
    fixtures.push_back({"composite", cd::klein_with_swap(), {1, -1},
                        {cd::two_coord(5, 0, 1, 2, 2), cd::two_coord(5, 1, 1, 3, 2)}, SplitBranch::composite});

    for (const auto& f : fixtures) {
      ClosedGroup g(f.inst);
      IndexTwoPair pair(g, cd::find_char(g, f.chi));
      OrthogonalSplit split = orthogonal_induction_split(pair, f.v0, seed_);
      if (split.branch != f.branch) {
        fail(ok, detail, f.label + ": unexpected branch");
        continue;
      }
      if (split.basis.size() != f.v0.size()) fail(ok, detail, f.label + ": output dimension drifted");
      const Mat<CycNum>& z = g.exact(pair.z());
      for (const auto& u : split.basis) {
        std::vector<CycNum> zu(u.size(), CycNum(0));
        for (long i = 0; i < z.rows; ++i)
          for (long j = 0; j < z.cols; ++j)
            zu[static_cast<std::size_t>(i)] = zu[static_cast<std::size_t>(i)] + z.at(i, j) * u[static_cast<std::size_t>(j)];
        for (const auto& w : split.basis) {
          CycNum d(0);
          for (std::size_t i = 0; i < w.size(); ++i) d = d + w[i] * zu[i];
          if (!d.is_zero()) fail(ok, detail, f.label + ": output meets its swapped copy");
        }
      }
    }
    if (ok) detail << pairs << " index-two pairs, " << constituents
                   << " kernel constituents, six split branches certified";
    return ok;
  }

  // Every corpus verdict re-verified from its certificates at a fresh prime.
  bool check_prime_independence(std::ostringstream& detail) {
    bool ok = true;
    for (const auto& spec : default_corpus()) {
      Entry& e = entry(spec);
      const auto& rep = e.acc->report();
      if (rep.p1 == rep.p2) fail(ok, detail, spec + ": the two working primes coincide");
      try {
        verify_acceptability(*e.group, rep, seed_);
      } catch (const std::exception& ex) {
        fail(ok, detail, spec + ": " + ex.what());
      }
    }
    if (ok) detail << default_corpus().size() << " instances re-verified at a third prime";
    return ok;
  }

  std::map<std::string, Entry> cache_;
  std::uint64_t seed_;
};

}  // namespace spinacc
