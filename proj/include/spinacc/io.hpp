#pragma once

// JSON interchange: instance files in, classification reports out. Parsers
// are strict and name the offending field; emitters produce one canonical
// ordered document per input, so equal reports serialize to equal bytes.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinacc/acceptability.hpp"
#include "spinacc/classify.hpp"
#include "spinacc/constructions.hpp"
#include "spinacc/error.hpp"

namespace spinacc {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars

// Strict form of rat_from_string: integer or integer/integer only, and the
// error names the field being parsed.
inline Rat parse_rat_field(const std::string& s, const std::string& path) {
  if (s.empty()) throw input_error(path + ": empty rational literal");
  std::size_t i = s[0] == '-' ? 1 : 0;
  bool digits = false, slash = false, denom_digits = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && digits) {
      slash = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      (slash ? denom_digits : digits) = true;
    } else {
      throw input_error(path + ": malformed rational literal '" + s + "'");
    }
  }
  if (!digits || (slash && !denom_digits)) throw input_error(path + ": malformed rational literal '" + s + "'");
  if (slash) {
    std::string den = s.substr(s.find('/') + 1);
    if (den.find_first_not_of('0') == std::string::npos)
      throw input_error(path + ": zero denominator in '" + s + "'");
  }
  return Rat(s);
}

inline Json cyc_to_json(const CycNum& x) {
  if (x.is_rational()) return Json(rat_to_string(x.to_rat()));
  std::size_t len = x.c.size();
  while (len > 1 && x.c[len - 1] == 0) --len;
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < len; ++i) coeffs.push_back(rat_to_string(x.c[i]));
  return Json{{"M", x.M}, {"c", std::move(coeffs)}};
}

namespace iodetail {

inline void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& path) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const auto& k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) throw input_error(path + ": unknown field '" + item.key() + "'");
  }
}

inline const Json& need(const Json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(path + ": missing field '" + key + "'");
  return *it;
}

inline long need_long(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_number_integer()) throw input_error(path + "." + key + ": expected an integer");
  return v.get<long>();
}

inline std::uint64_t need_u64(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
    throw input_error(path + "." + key + ": expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

inline bool need_bool(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_boolean()) throw input_error(path + "." + key + ": expected a boolean");
  return v.get<bool>();
}

inline std::string need_string(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = need(j, key, path);
  if (!v.is_string()) throw input_error(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace iodetail

inline CycNum cyc_from_json(const Json& j, long M, const std::string& path) {
  if (j.is_number_integer()) return CycNum(static_cast<int>(j.get<long>()));
  if (j.is_string()) return CycNum(parse_rat_field(j.get<std::string>(), path));
  if (j.is_object()) {
    iodetail::check_keys(j, {"M", "c"}, path);
    long m = iodetail::need_long(j, "M", path);
    if (m < 1) throw input_error(path + ".M: must be positive");
    if (M % m != 0) throw input_error(path + ".M: " + std::to_string(m) + " does not divide the instance order " + std::to_string(M));
    const Json& coeffs = iodetail::need(j, "c", path);
    if (!coeffs.is_array() || coeffs.empty()) throw input_error(path + ".c: expected a nonempty array");
    if (static_cast<long>(coeffs.size()) > m) throw input_error(path + ".c: more coefficients than the root order");
    CycNum acc(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Json& e = coeffs[i];
      std::string epath = path + ".c[" + std::to_string(i) + "]";
      Rat r;
      if (e.is_number_integer()) {
        r = Rat(e.get<long>());
      } else if (e.is_string()) {
        r = parse_rat_field(e.get<std::string>(), epath);
      } else {
        throw input_error(epath + ": expected an integer or a rational string");
      }
      if (r != 0) acc = acc + CycNum(r) * root_of_unity(m, static_cast<long>(i));
    }
    return cyc_embed(acc, M);
  }
  throw input_error(path + ": expected an integer, a rational string, or a coefficient object");
}

inline Json signs_to_json(const std::vector<int>& signs) {
  Json a = Json::array();
  for (int s : signs) a.push_back(s);
  return a;
}

inline std::vector<int> signs_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw input_error(path + ": expected an array of signs");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || (j[i].get<long>() != 1 && j[i].get<long>() != -1))
      throw input_error(path + "[" + std::to_string(i) + "]: expected 1 or -1");
    out.push_back(static_cast<int>(j[i].get<long>()));
  }
  return out;
}

// Sign vector as text: (+,-,+)
inline std::string render_signs(const std::vector<int>& signs) {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ",";
    s += signs[i] == 1 ? "+" : "-";
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Instance files

struct InstanceOptions {
  long max_order = 20000;
  long prime_count = 2;
  std::uint64_t seed = 1;
  bool operator==(const InstanceOptions&) const = default;
};

// A named generator set with optional unit-scalar tags. A tagged generator
// stands for zeta_M^k times the matrix, which lands the instance in the
// scalar extension rather than the rotation group itself.
struct InstanceFile {
  std::string name;
  GroupInstance instance;
  std::vector<long> zeta_pow;  // one exponent per generator; all zero when untagged
  InstanceOptions options;

  bool has_scalar_tags() const {
    for (long k : zeta_pow)
      if (k != 0) return true;
    return false;
  }
};

namespace iodetail {

// x -> x - 2 <x,v>/<v,v> v, as a matrix.
inline Mat<CycNum> reflection_matrix(const std::vector<CycNum>& v, const std::string& path) {
  long n = static_cast<long>(v.size());
  CycNum vv(0);
  for (const auto& x : v) vv = vv + x * x;
  if (vv.is_zero()) throw input_error(path + ": reflection vector has zero length");
  Mat<CycNum> m = Mat<CycNum>::eye(n);
  CycNum two_over(Rat(2));
  two_over = two_over / vv;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m.at(i, j) = m.at(i, j) - two_over * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return m;
}

inline std::vector<CycNum> vector_from_json(const Json& j, long n, long M, const std::string& path) {
  if (!j.is_array() || static_cast<long>(j.size()) != n)
    throw input_error(path + ": expected an array of " + std::to_string(n) + " entries");
  std::vector<CycNum> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(cyc_from_json(j[i], M, path + "[" + std::to_string(i) + "]"));
  return v;
}

inline void check_orthogonal(const Mat<CycNum>& m, const std::string& path) {
  long n = m.rows;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CycNum acc(0);
      for (long k = 0; k < n; ++k) acc = acc + m.at(k, i) * m.at(k, j);
      if (!(acc == CycNum(i == j ? 1 : 0))) throw input_error(path + ": generator is not orthogonal");
    }
}

}  // namespace iodetail

inline InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("instance: expected a JSON object");
  iodetail::check_keys(j, {"name", "n", "M", "generators", "options"}, "instance");
  InstanceFile out;
  const Json& name = iodetail::need(j, "name", "instance");
  if (!name.is_string()) throw input_error("instance.name: expected a string");
  out.name = name.get<std::string>();
  long n = iodetail::need_long(j, "n", "instance");
  long M = iodetail::need_long(j, "M", "instance");
  if (n < 1) throw input_error("instance.n: must be positive");
  if (M < 1) throw input_error("instance.M: must be positive");
  out.instance.n = n;
  out.instance.M = M;

  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw input_error("instance.options: expected an object");
    iodetail::check_keys(o, {"max_order", "prime_count", "seed"}, "instance.options");
    if (o.contains("max_order")) out.options.max_order = iodetail::need_long(o, "max_order", "instance.options");
    if (o.contains("prime_count")) out.options.prime_count = iodetail::need_long(o, "prime_count", "instance.options");
    if (o.contains("seed")) out.options.seed = iodetail::need_u64(o, "seed", "instance.options");
    if (out.options.max_order < 1) throw input_error("instance.options.max_order: must be positive");
    if (out.options.prime_count < 2) throw input_error("instance.options.prime_count: needs at least two primes");
  }

  const Json& gens = iodetail::need(j, "generators", "instance");
  if (!gens.is_array() || gens.empty()) throw input_error("instance.generators: expected a nonempty array");

  bool lone_construct = gens.size() == 1 && gens[0].is_object() && gens[0].contains("construct");

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::string path = "instance.generators[" + std::to_string(gi) + "]";
    const Json& g = gens[gi];
    if (!g.is_object()) throw input_error(path + ": expected an object");

    long zeta = 0;
    if (g.contains("zeta_pow")) {
      zeta = iodetail::need_long(g, "zeta_pow", path);
      zeta %= M;
      if (zeta < 0) zeta += M;
    }
    std::string gname;
    if (g.contains("name")) {
      if (!g["name"].is_string()) throw input_error(path + ".name: expected a string");
      gname = g["name"].get<std::string>();
    }

    if (g.contains("construct")) {
      iodetail::check_keys(g, {"construct", "zeta_pow", "name"}, path);
      if (!g["construct"].is_string()) throw input_error(path + ".construct: expected a builder string");
      GroupInstance built = parse_instance(g["construct"].get<std::string>());
      if (built.n != n) throw input_error(path + ".construct: builder dimension " + std::to_string(built.n) +
                                          " does not match instance dimension " + std::to_string(n));
      if (M % built.M != 0) throw input_error(path + ".construct: builder root order " + std::to_string(built.M) +
                                              " does not divide instance root order " + std::to_string(M));
      for (std::size_t k = 0; k < built.gens.size(); ++k) {
        Mat<CycNum> lifted(n, n);
        for (long r = 0; r < n; ++r)
          for (long c = 0; c < n; ++c) lifted.at(r, c) = cyc_embed(built.gens[k].at(r, c), M);
        out.instance.gens.push_back(std::move(lifted));
        out.instance.gen_names.push_back(built.gen_names.size() > k ? built.gen_names[k]
                                                                    : "g" + std::to_string(out.instance.gens.size() - 1));
        out.zeta_pow.push_back(zeta);
      }
      // The double-cover data survives only when this builder is the whole
      // generator list in its own field; scalar tags ride alongside it.
      if (lone_construct && built.M == M) out.instance.lifts = built.lifts;
      continue;
    }

    Mat<CycNum> mat(n, n);
    if (g.contains("rotation")) {
      iodetail::check_keys(g, {"rotation", "zeta_pow", "name"}, path);
      const Json& r = g["rotation"];
      if (!r.is_object()) throw input_error(path + ".rotation: expected an object");
      iodetail::check_keys(r, {"plane", "num", "den"}, path + ".rotation");
      const Json& plane = iodetail::need(r, "plane", path + ".rotation");
      if (!plane.is_array() || plane.size() != 2 || !plane[0].is_number_integer() || !plane[1].is_number_integer())
        throw input_error(path + ".rotation.plane: expected two coordinate indices");
      long pi = plane[0].get<long>(), pj = plane[1].get<long>();
      if (pi < 0 || pj < 0 || pi >= n || pj >= n || pi == pj)
        throw input_error(path + ".rotation.plane: indices must be distinct and below " + std::to_string(n));
      long num = iodetail::need_long(r, "num", path + ".rotation");
      long den = iodetail::need_long(r, "den", path + ".rotation");
      if (den == 0) throw input_error(path + ".rotation.den: must be nonzero");
      if ((M * num) % den != 0)
        throw input_error(path + ".rotation.den: angle " + std::to_string(num) + "/" + std::to_string(den) +
                          " needs a root of unity outside order " + std::to_string(M));
      mat = rotation_block(n, pi, pj, M, num, den);
    } else if (g.contains("reflection_pair")) {
      iodetail::check_keys(g, {"reflection_pair", "zeta_pow", "name"}, path);
      const Json& rp = g["reflection_pair"];
      if (!rp.is_array() || rp.size() != 2) throw input_error(path + ".reflection_pair: expected two vectors");
      auto v = iodetail::vector_from_json(rp[0], n, M, path + ".reflection_pair[0]");
      auto w = iodetail::vector_from_json(rp[1], n, M, path + ".reflection_pair[1]");
      mat = iodetail::reflection_matrix(v, path + ".reflection_pair[0]") *
            iodetail::reflection_matrix(w, path + ".reflection_pair[1]");
    } else if (g.contains("matrix")) {
      iodetail::check_keys(g, {"matrix", "zeta_pow", "name"}, path);
      const Json& entries = g["matrix"];
      if (!entries.is_array() || static_cast<long>(entries.size()) != n * n)
        throw input_error(path + ".matrix: expected " + std::to_string(n * n) + " row-major entries");
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
          mat.at(r, c) = cyc_from_json(entries[static_cast<std::size_t>(r * n + c)], M,
                                       path + ".matrix[" + std::to_string(r * n + c) + "]");
      iodetail::check_orthogonal(mat, path);
    } else {
      throw input_error(path + ": needs one of 'rotation', 'reflection_pair', 'matrix', 'construct'");
    }
    out.instance.gens.push_back(std::move(mat));
    out.instance.gen_names.push_back(gname.empty() ? "g" + std::to_string(out.instance.gens.size() - 1) : gname);
    out.zeta_pow.push_back(zeta);
  }

  if (out.instance.gen_names.size() != out.instance.gens.size())
    throw std::logic_error("generator names out of step with generators");
  return out;
}

inline InstanceFile load_instance_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("instance: ") + e.what());
  }
  return instance_from_json(j);
}

// Canonical emission: every generator as explicit matrix entries.
inline Json instance_to_json(const InstanceFile& file) {
  Json gens = Json::array();
  for (std::size_t k = 0; k < file.instance.gens.size(); ++k) {
    const Mat<CycNum>& m = file.instance.gens[k];
    Json entries = Json::array();
    for (long r = 0; r < m.rows; ++r)
      for (long c = 0; c < m.cols; ++c) entries.push_back(cyc_to_json(m.at(r, c)));
    Json g{{"name", file.instance.gen_names[k]}, {"matrix", std::move(entries)}};
    if (!file.zeta_pow.empty() && file.zeta_pow[k] != 0) g["zeta_pow"] = file.zeta_pow[k];
    gens.push_back(std::move(g));
  }
  return Json{{"name", file.name},
              {"n", file.instance.n},
              {"M", file.instance.M},
              {"generators", std::move(gens)},
              {"options",
               Json{{"max_order", file.options.max_order},
                    {"prime_count", file.options.prime_count},
                    {"seed", file.options.seed}}}};
}

// ---------------------------------------------------------------------------
// Classification reports

struct ReportConstituent {
  long dim = 0;
  long mult = 0;
  int fs = 0;
  std::vector<int> det_signs;  // real type only
  bool operator==(const ReportConstituent&) const = default;
};

struct ReportXElement {
  std::vector<int> signs;
  std::vector<long> constituents;  // indices of real-type constituents whose determinants multiply to it
  bool operator==(const ReportXElement&) const = default;
};

struct ReportLine {
  std::vector<int> chi;
  long mult = 0;
  std::vector<CycNum> witness;
  bool operator==(const ReportLine&) const = default;
};

struct ReportChiVerdict {
  std::vector<int> chi;
  std::vector<int> eta_restriction;
  bool restriction_in_obstruction = false;
  bool type_ii = false;
  bool type_iii = false;
  bool type_iiia = false;
  bool type_iiib = false;
  bool operator==(const ReportChiVerdict&) const = default;
};

struct ReportEta {
  std::vector<int> eta;
  bool u1 = false;
  bool in_x = false;
  bool unacceptable = false;
  std::vector<int> eigenvalues;  // claimed eigenvalue per class, when the element condition holds
  long failure_class = -1;       // refuting class otherwise
  bool classified = false;
  bool type_i = false;
  std::vector<ReportChiVerdict> chi_verdicts;
  bool operator==(const ReportEta&) const = default;
};

struct ParsedReport {
  std::string name;
  long n = 0;
  long M = 0;
  long order = 0;
  std::uint64_t p1 = 0, p2 = 0, seed = 1;
  bool acceptable = true;
  bool discrete = false;
  bool stable = false;
  std::vector<ReportConstituent> constituents;
  std::vector<ReportXElement> x;
  std::vector<ReportLine> y;
  std::vector<ReportEta> etas;
  std::vector<std::vector<int>> e;
  bool operator==(const ParsedReport&) const = default;
};

namespace iodetail {

// Expresses each sign vector as a product of the given generators, working
// over F2 in the exponents. The generators are guaranteed to span.
class SignFactorizer {
 public:
  SignFactorizer(const std::vector<std::vector<int>>& gens, std::vector<long> labels)
      : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<char> row;
      for (int s : gens[i]) row.push_back(s == -1 ? 1 : 0);
      rows_.push_back(std::move(row));
      members_.push_back({static_cast<long>(i)});
    }
    // forward elimination, remembering which generators built each pivot row
    std::size_t r = 0;
    for (std::size_t col = 0; r < rows_.size() && col < width(); ++col) {
      std::size_t pivot = r;
      while (pivot < rows_.size() && !rows_[pivot][col]) ++pivot;
      if (pivot == rows_.size()) continue;
      std::swap(rows_[r], rows_[pivot]);
      std::swap(members_[r], members_[pivot]);
      for (std::size_t k = 0; k < rows_.size(); ++k)
        if (k != r && rows_[k][col]) add_row(k, r);
      pivots_.push_back(col);
      ++r;
    }
    rows_.resize(pivots_.size());
    members_.resize(pivots_.size());
  }

  std::vector<long> express(const std::vector<int>& target) const {
    std::vector<char> t;
    for (int s : target) t.push_back(s == -1 ? 1 : 0);
    std::vector<long> idx;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      if (!t[pivots_[r]]) continue;
      for (std::size_t c = 0; c < t.size(); ++c) t[c] = static_cast<char>(t[c] ^ rows_[r][c]);
      for (long g : members_[r]) flip(idx, g);
    }
    for (char c : t)
      if (c) throw std::logic_error("sign vector is outside the generated subgroup");
    std::vector<long> out;
    for (long g : idx) out.push_back(labels_[static_cast<std::size_t>(g)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t width() const { return rows_.empty() ? 0 : rows_[0].size(); }

  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < rows_[dst].size(); ++c)
      rows_[dst][c] = static_cast<char>(rows_[dst][c] ^ rows_[src][c]);
    for (long g : members_[src]) flip(members_[dst], g);
  }

  static void flip(std::vector<long>& set, long g) {
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i] == g) {
        set.erase(set.begin() + static_cast<long>(i));
        return;
      }
    set.push_back(g);
  }

  std::vector<std::vector<char>> rows_;
  std::vector<std::vector<long>> members_;
  std::vector<std::size_t> pivots_;
  std::vector<long> labels_;
};

}  // namespace iodetail

// Gathers engine output into the serializable report form, deriving the
// obstruction-membership certificates along the way.
inline ParsedReport make_report(const std::string& name, const ClosedGroup& G, const Acceptability& acc,
                                const ClassificationReport* cls, std::uint64_t seed) {
  const AcceptabilityReport& a = acc.report();
  ParsedReport out;
  out.name = name;
  out.n = G.n();
  out.M = G.M();
  out.order = G.size();
  out.p1 = a.p1;
  out.p2 = a.p2;
  out.seed = seed;
  out.acceptable = a.acceptable;
  out.discrete = a.discrete;
  out.stable = a.stable;

  std::vector<std::vector<int>> xgens;
  std::vector<long> labels;
  const auto& cons = acc.modrep().constituents();
  for (std::size_t i = 0; i < cons.size(); ++i) {
    ReportConstituent rc;
    rc.dim = cons[i].dim;
    rc.mult = cons[i].mult;
    rc.fs = cons[i].fs;
    if (cons[i].fs == 1) {
      rc.det_signs = cons[i].det_signs;
      xgens.push_back(cons[i].det_signs);
      labels.push_back(static_cast<long>(i));
    }
    out.constituents.push_back(std::move(rc));
  }
  iodetail::SignFactorizer factor(xgens, labels);
  for (const auto& chi : a.x_set) {
    ReportXElement xe;
    xe.signs = chi.gen_signs;
    xe.constituents = factor.express(chi.gen_signs);
    out.x.push_back(std::move(xe));
  }

  for (const auto& line : a.y_set) {
    ReportLine rl;
    rl.chi = line.chi.gen_signs;
    rl.mult = line.mult;
    rl.witness = line.witness;
    out.y.push_back(std::move(rl));
  }

  for (const auto& v : a.verdicts) {
    ReportEta re;
    re.eta = v.eta.gen_signs;
    re.u1 = v.u1;
    re.in_x = v.in_x;
    re.unacceptable = v.unacceptable;
    if (v.u1) {
      for (long c = 0; c < G.num_classes(); ++c)
        re.eigenvalues.push_back(v.eta.values[static_cast<std::size_t>(G.class_reps()[static_cast<std::size_t>(c)])]);
    } else if (v.failure) {
      re.failure_class = v.failure->class_index;
    }
    if (cls != nullptr) {
      for (const auto& ec : cls->etas) {
        if (ec.eta.gen_signs != v.eta.gen_signs) continue;
        re.classified = true;
        re.type_i = ec.type_i;
        for (const auto& cv : ec.chi_verdicts) {
          ReportChiVerdict rcv;
          rcv.chi = cv.chi.gen_signs;
          rcv.eta_restriction = cv.eta_restriction;
          rcv.restriction_in_obstruction = cv.restriction_in_sub_x;
          rcv.type_ii = cv.type_ii;
          rcv.type_iii = cv.type_iii;
          rcv.type_iiia = cv.type_iiia;
          rcv.type_iiib = cv.type_iiib;
          re.chi_verdicts.push_back(std::move(rcv));
        }
      }
    }
    out.etas.push_back(std::move(re));
  }

  for (const auto& eta : a.e_set) out.e.push_back(eta.gen_signs);
  return out;
}

inline Json report_to_json(const ParsedReport& r) {
  Json cons = Json::array();
  for (const auto& c : r.constituents) {
    Json jc{{"dim", c.dim}, {"mult", c.mult}, {"fs", c.fs}};
    if (c.fs == 1) jc["det_signs"] = signs_to_json(c.det_signs);
    cons.push_back(std::move(jc));
  }
  Json x = Json::array();
  for (const auto& xe : r.x) {
    Json idx = Json::array();
    for (long i : xe.constituents) idx.push_back(i);
    x.push_back(Json{{"signs", signs_to_json(xe.signs)}, {"constituents", std::move(idx)}});
  }
  Json y = Json::array();
  for (const auto& line : r.y) {
    Json w = Json::array();
    for (const auto& c : line.witness) w.push_back(cyc_to_json(c));
    y.push_back(Json{{"chi", signs_to_json(line.chi)}, {"mult", line.mult}, {"witness", std::move(w)}});
  }
  Json etas = Json::array();
  for (const auto& re : r.etas) {
    Json je{{"eta", signs_to_json(re.eta)}, {"u1", re.u1}, {"in_x", re.in_x}, {"unacceptable", re.unacceptable}};
    if (re.u1) {
      je["eigenvalues"] = signs_to_json(re.eigenvalues);
    } else if (re.failure_class >= 0) {
      je["failure_class"] = re.failure_class;
    }
    if (re.classified) {
      Json cvs = Json::array();
      for (const auto& cv : re.chi_verdicts)
        cvs.push_back(Json{{"chi", signs_to_json(cv.chi)},
                           {"eta_restriction", signs_to_json(cv.eta_restriction)},
                           {"restriction_in_obstruction", cv.restriction_in_obstruction},
                           {"type_ii", cv.type_ii},
                           {"type_iii", cv.type_iii},
                           {"type_iiia", cv.type_iiia},
                           {"type_iiib", cv.type_iiib}});
      je["classification"] = Json{{"type_i", re.type_i}, {"chi_verdicts", std::move(cvs)}};
    }
    etas.push_back(std::move(je));
  }
  Json e = Json::array();
  for (const auto& signs : r.e) e.push_back(signs_to_json(signs));
  return Json{{"name", r.name},
              {"n", r.n},
              {"M", r.M},
              {"order", r.order},
              {"engine", Json{{"p1", r.p1}, {"p2", r.p2}, {"seed", r.seed}}},
              {"verdict", r.acceptable ? "acceptable" : "unacceptable"},
              {"discrete", r.discrete},
              {"stable", r.stable},
              {"constituents", std::move(cons)},
              {"x", std::move(x)},
              {"y", std::move(y)},
              {"etas", std::move(etas)},
              {"e", std::move(e)}};
}

inline ParsedReport report_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("report: expected a JSON object");
  iodetail::check_keys(j, {"name", "n", "M", "order", "engine", "verdict", "discrete", "stable", "constituents",
                           "x", "y", "etas", "e"},
                       "report");
  ParsedReport r;
  r.name = iodetail::need_string(j, "name", "report");
  r.n = iodetail::need_long(j, "n", "report");
  r.M = iodetail::need_long(j, "M", "report");
  r.order = iodetail::need_long(j, "order", "report");
  const Json& eng = iodetail::need(j, "engine", "report");
  iodetail::check_keys(eng, {"p1", "p2", "seed"}, "report.engine");
  r.p1 = iodetail::need_u64(eng, "p1", "report.engine");
  r.p2 = iodetail::need_u64(eng, "p2", "report.engine");
  r.seed = iodetail::need_u64(eng, "seed", "report.engine");
  std::string verdict = iodetail::need_string(j, "verdict", "report");
  if (verdict != "acceptable" && verdict != "unacceptable")
    throw input_error("report.verdict: expected 'acceptable' or 'unacceptable'");
  r.acceptable = verdict == "acceptable";
  r.discrete = iodetail::need_bool(j, "discrete", "report");
  r.stable = iodetail::need_bool(j, "stable", "report");

  for (const Json& jc : iodetail::need(j, "constituents", "report")) {
    ReportConstituent c;
    c.dim = iodetail::need_long(jc, "dim", "report.constituents");
    c.mult = iodetail::need_long(jc, "mult", "report.constituents");
    c.fs = static_cast<int>(iodetail::need_long(jc, "fs", "report.constituents"));
    if (jc.contains("det_signs")) c.det_signs = signs_from_json(jc["det_signs"], "report.constituents.det_signs");
    r.constituents.push_back(std::move(c));
  }
  for (const Json& jx : iodetail::need(j, "x", "report")) {
    ReportXElement xe;
    xe.signs = signs_from_json(iodetail::need(jx, "signs", "report.x"), "report.x.signs");
    for (const Json& i : iodetail::need(jx, "constituents", "report.x")) xe.constituents.push_back(i.get<long>());
    r.x.push_back(std::move(xe));
  }
  for (const Json& jy : iodetail::need(j, "y", "report")) {
    ReportLine line;
    line.chi = signs_from_json(iodetail::need(jy, "chi", "report.y"), "report.y.chi");
    line.mult = iodetail::need_long(jy, "mult", "report.y");
    for (const Json& w : iodetail::need(jy, "witness", "report.y"))
      line.witness.push_back(cyc_from_json(w, r.M, "report.y.witness"));
    r.y.push_back(std::move(line));
  }
  for (const Json& je : iodetail::need(j, "etas", "report")) {
    ReportEta re;
    re.eta = signs_from_json(iodetail::need(je, "eta", "report.etas"), "report.etas.eta");
    re.u1 = iodetail::need_bool(je, "u1", "report.etas");
    re.in_x = iodetail::need_bool(je, "in_x", "report.etas");
    re.unacceptable = iodetail::need_bool(je, "unacceptable", "report.etas");
    if (je.contains("eigenvalues")) re.eigenvalues = signs_from_json(je["eigenvalues"], "report.etas.eigenvalues");
    if (je.contains("failure_class")) re.failure_class = je["failure_class"].get<long>();
    if (je.contains("classification")) {
      const Json& jcl = je["classification"];
      iodetail::check_keys(jcl, {"type_i", "chi_verdicts"}, "report.etas.classification");
      re.classified = true;
      re.type_i = iodetail::need_bool(jcl, "type_i", "report.etas.classification");
      for (const Json& jcv : iodetail::need(jcl, "chi_verdicts", "report.etas.classification")) {
        ReportChiVerdict cv;
        cv.chi = signs_from_json(iodetail::need(jcv, "chi", "report.etas.chi_verdicts"), "report.etas.chi_verdicts.chi");
        cv.eta_restriction = signs_from_json(iodetail::need(jcv, "eta_restriction", "report.etas.chi_verdicts"),
                                             "report.etas.chi_verdicts.eta_restriction");
        cv.restriction_in_obstruction = iodetail::need_bool(jcv, "restriction_in_obstruction", "report.etas.chi_verdicts");
        cv.type_ii = iodetail::need_bool(jcv, "type_ii", "report.etas.chi_verdicts");
        cv.type_iii = iodetail::need_bool(jcv, "type_iii", "report.etas.chi_verdicts");
        cv.type_iiia = iodetail::need_bool(jcv, "type_iiia", "report.etas.chi_verdicts");
        cv.type_iiib = iodetail::need_bool(jcv, "type_iiib", "report.etas.chi_verdicts");
        re.chi_verdicts.push_back(std::move(cv));
      }
    }
    r.etas.push_back(std::move(re));
  }
  for (const Json& js : iodetail::need(j, "e", "report")) r.e.push_back(signs_from_json(js, "report.e"));
  return r;
}

// Human-readable rendering of a report.
inline std::string render_report_text(const ParsedReport& r) {
  std::ostringstream os;
  os << "instance " << r.name << ": order " << r.order << ", n = " << r.n << ", M = " << r.M << ", primes "
     << r.p1 << "/" << r.p2 << "\n";
  os << "verdict: " << (r.acceptable ? "acceptable" : "unacceptable") << (r.discrete ? ", discrete" : "")
     << (r.stable ? ", stable" : "") << "\n";
  os << "obstruction subgroup (" << r.x.size() << "):";
  for (const auto& xe : r.x) os << " " << render_signs(xe.signs);
  os << "\n";
  os << "stable lines (" << r.y.size() << "):";
  for (const auto& line : r.y) os << " " << render_signs(line.chi) << " x" << line.mult;
  os << "\n";
  os << "unacceptable characters (" << r.e.size() << "):";
  for (const auto& signs : r.e) os << " " << render_signs(signs);
  os << "\n";
  for (const auto& re : r.etas) {
    if (!re.classified) continue;
    os << "eta " << render_signs(re.eta) << ":";
    if (re.type_i) os << " type I";
    for (const auto& cv : re.chi_verdicts) {
      if (cv.type_ii) os << " type II wrt " << render_signs(cv.chi);
      if (cv.type_iiia) os << " type IIIa wrt " << render_signs(cv.chi);
      if (cv.type_iiib) os << " type IIIb wrt " << render_signs(cv.chi);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace spinacc
