#pragma once

#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spinacc/clifford.hpp"
#include "spinacc/constructions_util.hpp"
#include "spinacc/group.hpp"

namespace spinacc {

// Lift of a diagonal sign matrix negating exactly the listed coordinates.
// The count must be even; the product of the basis vectors is the rotor.
inline Clif flips_lift(long n, const std::vector<long>& coords) {
  if (coords.size() % 2 != 0) throw std::logic_error("flips_lift needs an even number of coordinates");
  Clif x = Clif::one(n);
  for (long c : coords) x = x * Clif::basis_vector(n, c);
  return x;
}

inline Mat<CycNum> flips_matrix(long n, const std::vector<long>& coords) {
  std::vector<int> signs(static_cast<std::size_t>(n), 1);
  for (long c : coords) signs[static_cast<std::size_t>(c)] = -1;
  return diag_signs(signs);
}

// Lift of the cycle a_0 -> a_1 -> ... -> a_{m-1} -> a_0 on coordinates,
// as a product of m-1 plane swaps. Odd for even m, even for odd m.
inline Clif cycle_lift(long n, const std::vector<long>& cyc, long M) {
  Clif x = Clif::one(n);
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
    x = x * swap_unit(n, cyc[i], cyc[i + 1], M);
  return x;
}

inline Clif embed_lift(const Clif& x, long n) {
  Clif out(n);
  out.terms = x.terms;
  return out;
}

// ---------------------------------------------------------------------------
// Named instances. Every generator ships with an exact Clifford lift; the
// closure engine checks pi(lift) = generator on construction.
// ---------------------------------------------------------------------------

inline GroupInstance trivial_instance(long n) {
  GroupInstance inst;
  inst.n = n;
  inst.M = 8;
  inst.name = "trivial:" + std::to_string(n);
  inst.gens = {Mat<CycNum>::eye(n)};
  inst.lifts = {Clif::one(n)};
  inst.gen_names = {"1"};
  return inst;
}

// Two commuting order-4 elements on 1 + 1 + 1 + 2 + 2 coordinates: sign
// flips on the two lines, quarter turns on the planes with opposite senses
// distinguishing the generators.
inline GroupInstance example1_instance() {
  GroupInstance inst;
  inst.n = 7;
  inst.M = 8;
  inst.name = "example1";
  Mat<CycNum> flip12 = flips_matrix(7, {1, 2});
  Mat<CycNum> ga = flip12 * rotation_block(7, 3, 4, 8, 1, 4) * rotation_block(7, 5, 6, 8, 3, 4);
  Mat<CycNum> gb = flip12 * rotation_block(7, 3, 4, 8, 1, 4) * rotation_block(7, 5, 6, 8, 1, 4);
  inst.gens = {ga, gb};
  Clif f12 = flips_lift(7, {1, 2});
  inst.lifts = {f12 * plane_rotor(7, 3, 4, 8, 1, 4) * plane_rotor(7, 5, 6, 8, 3, 4),
                f12 * plane_rotor(7, 3, 4, 8, 1, 4) * plane_rotor(7, 5, 6, 8, 1, 4)};
  inst.gen_names = {"a", "b"};
  return inst;
}

namespace detail {

// Swap of the planes (1,2) <-> (3,4) by the identity map, with the (5,6)
// plane negated. Shared by several families below.
inline Mat<CycNum> plane_swap_f3_matrix() {
  Mat<CycNum> m(7, 7);
  m.at(0, 0) = CycNum(1);
  m.at(1, 3) = m.at(2, 4) = CycNum(1);
  m.at(3, 1) = m.at(4, 2) = CycNum(1);
  m.at(5, 5) = m.at(6, 6) = CycNum(-1);
  return m;
}

inline Clif plane_swap_f3_lift(long M) {
  return swap_unit(7, 1, 3, M) * swap_unit(7, 2, 4, M) * flips_lift(7, {5, 6});
}

}  // namespace detail

// Torus of rotations on two planes with a reflection-type flip, a plane
// swap, and a fixed plane picking up the swap sign. Rotation orders e1 on
// the first plane and e2 on the second.
inline GroupInstance weil_type_i_core(long e1, long e2) {
  GroupInstance inst;
  inst.n = 7;
  inst.M = std::lcm<long>(8, std::lcm(2 * e1, 2 * e2));
  inst.name = "weil1:" + std::to_string(e1) + "," + std::to_string(e2);
  inst.gens = {rotation_block(7, 1, 2, inst.M, 1, e1), rotation_block(7, 3, 4, inst.M, 1, e2),
               flips_matrix(7, {2, 4}), detail::plane_swap_f3_matrix()};
  inst.lifts = {plane_rotor(7, 1, 2, inst.M, 1, e1), plane_rotor(7, 3, 4, inst.M, 1, e2),
                flips_lift(7, {2, 4}), detail::plane_swap_f3_lift(inst.M)};
  inst.gen_names = {"t1", "t2", "u0", "s0"};
  return inst;
}

// The diagonal-torus variant: both generators rotate both planes, with the
// second generator turning the planes in opposite senses.
inline GroupInstance gcal_instance(long d) {
  GroupInstance inst;
  inst.n = 7;
  inst.M = std::lcm<long>(8, 2 * d);
  inst.name = "gcal:" + std::to_string(d);
  inst.gens = {rotation_block(7, 1, 2, inst.M, 1, d) * rotation_block(7, 3, 4, inst.M, 1, d),
               rotation_block(7, 1, 2, inst.M, 1, d) * rotation_block(7, 3, 4, inst.M, d - 1, d),
               flips_matrix(7, {2, 4}), detail::plane_swap_f3_matrix()};
  inst.lifts = {plane_rotor(7, 1, 2, inst.M, 1, d) * plane_rotor(7, 3, 4, inst.M, 1, d),
                plane_rotor(7, 1, 2, inst.M, 1, d) * plane_rotor(7, 3, 4, inst.M, d - 1, d),
                flips_lift(7, {2, 4}), detail::plane_swap_f3_lift(inst.M)};
  inst.gen_names = {"t1", "t2", "u0", "s0"};
  return inst;
}

// gcal extended by an outer involution acting by -1 on the fixed line, by
// reflections on both rotation planes, and diagonally on the last plane.
// The sign of the last block is a free choice; both give one group up to
// relabeling and must classify identically.
inline GroupInstance gprime_instance(long d, int f3_sign) {
  GroupInstance inst = gcal_instance(d);
  inst.name = "gprime:" + std::to_string(d) + "," + (f3_sign == 1 ? std::string("+1") : std::string("-1"));
  std::vector<long> flips = f3_sign == 1 ? std::vector<long>{0, 2, 4, 6} : std::vector<long>{0, 2, 4, 5};
  inst.gens.push_back(flips_matrix(7, flips));
  inst.lifts.push_back(flips_lift(7, flips));
  inst.gen_names.push_back("th");
  return inst;
}

// Three subgroups of a common wreath-like ambient group on 1 + 2 + 2 + 2
// coordinates; the last plane records the swap signature.
inline GroupInstance h1_instance(long d) {
  GroupInstance inst;
  inst.n = 7;
  inst.M = std::lcm<long>(8, 4 * d);
  inst.name = "h1:" + std::to_string(d);
  Mat<CycNum> m1 = rotation_block(7, 1, 2, inst.M, 1, d) * rotation_block(7, 3, 4, inst.M, d + 2, 2 * d) *
                   detail::plane_swap_f3_matrix();
  inst.gens = {flips_matrix(7, {1, 3}), flips_matrix(7, {2, 4}), m1};
  inst.lifts = {flips_lift(7, {1, 3}), flips_lift(7, {2, 4}),
                plane_rotor(7, 1, 2, inst.M, 1, d) * plane_rotor(7, 3, 4, inst.M, d + 2, 2 * d) *
                    detail::plane_swap_f3_lift(inst.M)};
  inst.gen_names = {"k1", "k2", "m1"};
  return inst;
}

inline GroupInstance h2_instance(long d) {
  GroupInstance inst;
  inst.n = 7;
  inst.M = std::lcm<long>(8, 4 * d);
  inst.name = "h2:" + std::to_string(d);
  inst.gens = {rotation_block(7, 1, 2, inst.M, 1, d) * rotation_block(7, 3, 4, inst.M, 1, d),
               flips_matrix(7, {2, 4}), detail::plane_swap_f3_matrix()};
  inst.lifts = {plane_rotor(7, 1, 2, inst.M, 1, d) * plane_rotor(7, 3, 4, inst.M, 1, d),
                flips_lift(7, {2, 4}), detail::plane_swap_f3_lift(inst.M)};
  inst.gen_names = {"rd", "md", "th"};
  return inst;
}

inline GroupInstance h3_instance(long d) {
  GroupInstance inst = h2_instance(d);
  inst.name = "h3:" + std::to_string(d);
  inst.gens[2] = flips_matrix(7, {3, 4}) * detail::plane_swap_f3_matrix();
  inst.lifts[2] = flips_lift(7, {3, 4}) * detail::plane_swap_f3_lift(inst.M);
  inst.gen_names[2] = "t";
  return inst;
}

// Three independent rotation orders on the planes P(1,2), P'(3,4), Q(5,6),
// a simultaneous reflection of P and P', and an involution negating the
// line, swapping P with P', and reflecting Q.
inline GroupInstance weil_type_iiia_core(long e1, long e2, long e3) {
  GroupInstance inst;
  inst.n = 7;
  inst.M = std::lcm<long>(8, std::lcm(2 * e1, std::lcm(2 * e2, 2 * e3)));
  inst.name = "weil3a:" + std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(e3);
  Mat<CycNum> w(7, 7);
  w.at(0, 0) = CycNum(-1);
  w.at(1, 3) = w.at(2, 4) = CycNum(1);
  w.at(3, 1) = w.at(4, 2) = CycNum(1);
  w.at(5, 5) = CycNum(1);
  w.at(6, 6) = CycNum(-1);
  inst.gens = {rotation_block(7, 1, 2, inst.M, 1, e1), rotation_block(7, 3, 4, inst.M, 1, e2),
               rotation_block(7, 5, 6, inst.M, 1, e3), flips_matrix(7, {2, 4}), w};
  inst.lifts = {plane_rotor(7, 1, 2, inst.M, 1, e1), plane_rotor(7, 3, 4, inst.M, 1, e2),
                plane_rotor(7, 5, 6, inst.M, 1, e3), flips_lift(7, {2, 4}),
                Clif::basis_vector(7, 0) * swap_unit(7, 1, 3, inst.M) * swap_unit(7, 2, 4, inst.M) *
                    Clif::basis_vector(7, 6)};
  inst.gen_names = {"rp", "rpp", "rq", "u", "w"};
  return inst;
}

inline GroupInstance hcal_instance(long e) {
  GroupInstance inst = weil_type_iiia_core(e, e, e);
  inst.name = "hcal:" + std::to_string(e);
  return inst;
}

namespace detail {

// Generators of a finite rotation group on a 3-coordinate block starting at
// base, with exact lifts. kind: a4, s4, a5, dihedral (order parameter k),
// cyclic (order k).
struct BlockGens {
  std::vector<Mat<CycNum>> mats;  // 7x7, identity outside the block
  std::vector<Clif> lifts;
  std::vector<std::string> names;
};

inline BlockGens rotation_block_group(const std::string& kind, long k, long base, long M) {
  BlockGens out;
  long a = base, b = base + 1, c = base + 2;
  auto cyc3 = [&]() {
    std::vector<long> cycle = {a, b, c};
    Mat<CycNum> m = Mat<CycNum>::eye(7);
    m.at(a, a) = m.at(b, b) = m.at(c, c) = CycNum(0);
    m.at(b, a) = m.at(c, b) = m.at(a, c) = CycNum(1);
    out.mats.push_back(m);
    out.lifts.push_back(cycle_lift(7, cycle, M));
    out.names.push_back("c3");
  };
  if (kind == "a4") {
    cyc3();
    out.mats.push_back(flips_matrix(7, {a, b}));
    out.lifts.push_back(flips_lift(7, {a, b}));
    out.names.push_back("d2");
  } else if (kind == "s4") {
    cyc3();
    out.mats.push_back(rotation_block(7, a, b, M, 1, 4));
    out.lifts.push_back(plane_rotor(7, a, b, M, 1, 4));
    out.names.push_back("r4");
  } else if (kind == "a5") {
    cyc3();
    // quarter-order-5 rotation about the axis (0, 1, phi) in block
    // coordinates; phi is the golden ratio. The rotor is the product of two
    // unit vectors at angle pi/5 in the plane normal to the axis.
    auto [c5, s5] = cos_sin(M, 1, 5);   // cos, sin of 2 pi / 5
    auto [c10, s10] = cos_sin(M, 1, 10);  // cos, sin of pi / 5
    CycNum inv_den = cyc_inv(CycNum(2) * s5);  // 1 / sqrt(phi + 2) = 1 / (2 sin(2 pi/5))
    CycNum phi = CycNum(2) * c10;              // golden ratio = 2 cos(pi/5)
    Clif u = Clif::basis_vector(7, a);
    std::vector<CycNum> w2coords(7, CycNum(0));
    w2coords[static_cast<std::size_t>(a)] = c10;
    w2coords[static_cast<std::size_t>(b)] = s10 * phi * inv_den;
    w2coords[static_cast<std::size_t>(c)] = CycNum(0) - s10 * inv_den;
    Clif w2 = Clif::vector(w2coords);
    Clif rotor = w2 * u;
    Mat<CycNum> m = pi_action(rotor);
    out.mats.push_back(m);
    out.lifts.push_back(rotor);
    out.names.push_back("r5");
  } else if (kind == "dihedral") {
    out.mats.push_back(rotation_block(7, a, b, M, 1, k));
    out.lifts.push_back(plane_rotor(7, a, b, M, 1, k));
    out.names.push_back("rk");
    out.mats.push_back(flips_matrix(7, {b, c}));
    out.lifts.push_back(flips_lift(7, {b, c}));
    out.names.push_back("f");
  } else if (kind == "cyclic") {
    out.mats.push_back(rotation_block(7, a, b, M, 1, k));
    out.lifts.push_back(plane_rotor(7, a, b, M, 1, k));
    out.names.push_back("rk");
  } else {
    throw input_error("unknown rotation block kind: " + kind);
  }
  return out;
}

}  // namespace detail

// Two copies of a finite rotation group B on the blocks (1,2,3) and (4,5,6),
// a central sign c negating both blocks, and a swap sw negating the line and
// exchanging the blocks.
inline GroupInstance ical_instance(const std::string& kind, long k = 0) {
  GroupInstance inst;
  inst.n = 7;
  long base_m = 8;
  if (kind == "a5") base_m = 40;
  if (kind == "dihedral" || kind == "cyclic") base_m = std::lcm<long>(8, 2 * k);
  inst.M = base_m;
  inst.name = "ical:" + kind + (k > 0 ? "," + std::to_string(k) : "");
  auto left = detail::rotation_block_group(kind, k, 1, inst.M);
  auto right = detail::rotation_block_group(kind, k, 4, inst.M);
  for (std::size_t i = 0; i < left.mats.size(); ++i) {
    inst.gens.push_back(left.mats[i]);
    inst.lifts.push_back(left.lifts[i]);
    inst.gen_names.push_back("t_" + left.names[i]);
  }
  for (std::size_t i = 0; i < right.mats.size(); ++i) {
    inst.gens.push_back(right.mats[i]);
    inst.lifts.push_back(right.lifts[i]);
    inst.gen_names.push_back("tp_" + right.names[i]);
  }
  inst.gens.push_back(flips_matrix(7, {1, 2, 3, 4, 5, 6}));
  inst.lifts.push_back(flips_lift(7, {1, 2, 3, 4, 5, 6}));
  inst.gen_names.push_back("c");
  Mat<CycNum> sw(7, 7);
  sw.at(0, 0) = CycNum(-1);
  for (long i = 1; i <= 3; ++i) {
    sw.at(i, i + 3) = CycNum(1);
    sw.at(i + 3, i) = CycNum(1);
  }
  inst.gens.push_back(sw);
  inst.lifts.push_back(Clif::basis_vector(7, 0) * swap_unit(7, 1, 4, inst.M) * swap_unit(7, 2, 5, inst.M) *
                       swap_unit(7, 3, 6, inst.M));
  inst.gen_names.push_back("sw");
  return inst;
}

// Dihedral-times-center group on 1 + 2 + 2 + 1 + 1 coordinates: the line
// carries one sign character, the two planes carry the standard plane
// representation and its twist by a second sign character, and the two
// last lines carry the plane determinant and its product with the first
// character.
inline GroupInstance d8mu2_instance() {
  GroupInstance inst;
  inst.n = 7;
  inst.M = 8;
  inst.name = "d8mu2";
  auto mk = [&](const Mat<CycNum>& p0, int cv, int ev, int dv) {
    Mat<CycNum> m(7, 7);
    m.at(0, 0) = CycNum(cv);
    for (long i = 0; i < 2; ++i)
      for (long j = 0; j < 2; ++j) {
        m.at(1 + i, 1 + j) = p0.at(i, j);
        m.at(3 + i, 3 + j) = CycNum(ev) * p0.at(i, j);
      }
    m.at(5, 5) = CycNum(dv);
    m.at(6, 6) = CycNum(cv * dv);
    return m;
  };
  Mat<CycNum> quarter(2, 2);
  quarter.at(0, 1) = CycNum(-1);
  quarter.at(1, 0) = CycNum(1);
  Mat<CycNum> mirror(2, 2);
  mirror.at(0, 0) = CycNum(1);
  mirror.at(1, 1) = CycNum(-1);
  inst.gens = {mk(quarter, -1, 1, 1), mk(mirror, 1, 1, -1), mk(Mat<CycNum>::eye(2), 1, -1, 1)};
  inst.lifts = {flips_lift(7, {0, 6}) * plane_rotor(7, 1, 2, 8, 1, 4) * plane_rotor(7, 3, 4, 8, 1, 4),
                flips_lift(7, {2, 4, 5, 6}), flips_lift(7, {3, 4})};
  inst.gen_names = {"rho", "m", "z"};
  return inst;
}

// Full 7-cycle of coordinates together with a double sign flip; the group
// has no nontrivial sign characters and an irreducible defining module.
inline GroupInstance signed_cycle_instance() {
  GroupInstance inst;
  inst.n = 7;
  inst.M = 8;
  inst.name = "signed_cycle";
  std::vector<long> perm = {1, 2, 3, 4, 5, 6, 0};
  inst.gens = {permutation_matrix(perm), flips_matrix(7, {0, 1})};
  Clif cyc = Clif::one(7);
  for (long i = 0; i < 6; ++i) cyc = cyc * swap_unit(7, i, i + 1, 8);
  inst.lifts = {cyc, flips_lift(7, {0, 1})};
  inst.gen_names = {"c7", "d2"};
  return inst;
}

// Pad an instance to a larger dimension with identity blocks; the lift of a
// generator is unchanged as an element of the bigger Clifford algebra.
inline GroupInstance standard_embed(const GroupInstance& base, long n) {
  if (n < base.n) throw input_error("embedding target dimension is too small");
  GroupInstance inst;
  inst.n = n;
  inst.M = base.M;
  inst.name = "embed:" + std::to_string(n) + ":" + base.name;
  inst.gen_names = base.gen_names;
  for (const auto& g : base.gens) inst.gens.push_back(corner_embed(g, n));
  for (const auto& l : base.lifts) inst.lifts.push_back(embed_lift(l, n));
  return inst;
}

// Seed-deterministic subgroup of the liftable coordinate-plane group: the
// ambient group is built from dihedral symmetries of floor(n/2) disjoint
// planes, plane swaps, and coordinate double flips, so every sample is
// finite and every generator has an exact lift by composition.
inline GroupInstance random_small_n(long n, std::uint64_t seed, std::uint64_t index) {
  if (n % 2 != 1 || n < 3) throw input_error("random instances need odd n >= 3");
  GroupInstance inst;
  inst.n = n;
  inst.M = 24;
  inst.name = "random:" + std::to_string(n) + "," + std::to_string(seed) + "," + std::to_string(index);
  std::mt19937_64 rng(seed ^ (0x517cc1b727220a95ull * (index + 1)));
  long planes = n / 2;
  auto rand_primitive = [&](Mat<CycNum>& m, Clif& l) {
    long kind = static_cast<long>(rng() % 3);
    if (kind == 0) {
      long p = static_cast<long>(rng() % static_cast<std::uint64_t>(planes));
      static const long dens[4] = {2, 3, 4, 6};
      long den = dens[rng() % 4];
      long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den));
      m = rotation_block(n, 2 * p, 2 * p + 1, 24, num, den);
      l = plane_rotor(n, 2 * p, 2 * p + 1, 24, num, den);
    } else if (kind == 1) {
      long a = static_cast<long>(rng() % static_cast<std::uint64_t>(n));
      long b = static_cast<long>(rng() % static_cast<std::uint64_t>(n));
      if (a == b) b = (b + 1) % n;
      m = flips_matrix(n, {a, b});
      l = flips_lift(n, {a, b});
    } else {
      if (planes < 2) {
        m = flips_matrix(n, {0, 1});
        l = flips_lift(n, {0, 1});
        return;
      }
      long p = static_cast<long>(rng() % static_cast<std::uint64_t>(planes));
      long q = static_cast<long>(rng() % static_cast<std::uint64_t>(planes));
      if (p == q) q = (q + 1) % planes;
      std::vector<long> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[static_cast<std::size_t>(2 * p)], perm[static_cast<std::size_t>(2 * q)]);
      std::swap(perm[static_cast<std::size_t>(2 * p + 1)], perm[static_cast<std::size_t>(2 * q + 1)]);
      m = permutation_matrix(perm);
      l = swap_unit(n, 2 * p, 2 * q, 24) * swap_unit(n, 2 * p + 1, 2 * q + 1, 24);
    }
  };
  long ngens = 2 + static_cast<long>(rng() % 2);
  for (long i = 0; i < ngens; ++i) {
    Mat<CycNum> acc = Mat<CycNum>::eye(n);
    Clif lacc = Clif::one(n);
    long len = 1 + static_cast<long>(rng() % 3);
    for (long t = 0; t < len; ++t) {
      Mat<CycNum> m;
      Clif l;
      rand_primitive(m, l);
      acc = acc * m;
      lacc = lacc * l;
    }
    inst.gens.push_back(acc);
    inst.lifts.push_back(lacc);
    inst.gen_names.push_back("g" + std::to_string(i));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Name-based factory: "<family>" or "<family>:<comma-separated parameters>".
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

inline long parse_long(const std::string& s) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw input_error("trailing characters in number: " + s);
    return v;
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error("not a number: " + s);
  }
}

}  // namespace detail

inline GroupInstance parse_instance(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto args = tail.empty() ? std::vector<std::string>{} : detail::split(tail, ',');
  auto want = [&](std::size_t k) {
    if (args.size() != k) throw input_error("instance " + head + " expects " + std::to_string(k) + " parameters");
  };
  if (head == "trivial") {
    want(1);
    return trivial_instance(detail::parse_long(args[0]));
  }
  if (head == "example1") {
    want(0);
    return example1_instance();
  }
  if (head == "gcal") {
    want(1);
    return gcal_instance(detail::parse_long(args[0]));
  }
  if (head == "gprime") {
    want(2);
    if (args[1] != "+1" && args[1] != "-1") throw input_error("gprime sign must be +1 or -1");
    return gprime_instance(detail::parse_long(args[0]), args[1] == "+1" ? 1 : -1);
  }
  if (head == "h1") {
    want(1);
    return h1_instance(detail::parse_long(args[0]));
  }
  if (head == "h2") {
    want(1);
    return h2_instance(detail::parse_long(args[0]));
  }
  if (head == "h3") {
    want(1);
    return h3_instance(detail::parse_long(args[0]));
  }
  if (head == "h123") {
    auto second = tail.find(':');
    if (second == std::string::npos) throw input_error("h123 syntax: h123:<i>:d=<order>");
    long which = detail::parse_long(tail.substr(0, second));
    std::string param = tail.substr(second + 1);
    if (param.rfind("d=", 0) != 0) throw input_error("h123 syntax: h123:<i>:d=<order>");
    long d = detail::parse_long(param.substr(2));
    if (which == 1) return h1_instance(d);
    if (which == 2) return h2_instance(d);
    if (which == 3) return h3_instance(d);
    throw input_error("h123 index must be 1, 2, or 3");
  }
  if (head == "hcal") {
    want(1);
    return hcal_instance(detail::parse_long(args[0]));
  }
  if (head == "weil1") {
    want(2);
    return weil_type_i_core(detail::parse_long(args[0]), detail::parse_long(args[1]));
  }
  if (head == "weil3a") {
    want(3);
    return weil_type_iiia_core(detail::parse_long(args[0]), detail::parse_long(args[1]), detail::parse_long(args[2]));
  }
  if (head == "ical") {
    if (args.size() == 1) return ical_instance(args[0]);
    if (args.size() == 2) return ical_instance(args[0], detail::parse_long(args[1]));
    throw input_error("ical expects a kind and an optional order");
  }
  if (head == "d8mu2") {
    want(0);
    return d8mu2_instance();
  }
  if (head == "signed_cycle") {
    want(0);
    return signed_cycle_instance();
  }
  if (head == "random") {
    want(3);
    return random_small_n(detail::parse_long(args[0]), static_cast<std::uint64_t>(detail::parse_long(args[1])),
                          static_cast<std::uint64_t>(detail::parse_long(args[2])));
  }
  if (head == "embed") {
    auto second = tail.find(':');
    if (second == std::string::npos) throw input_error("embed syntax: embed:<n>:<instance>");
    long n = detail::parse_long(tail.substr(0, second));
    return standard_embed(parse_instance(tail.substr(second + 1)), n);
  }
  throw input_error("unknown instance family: " + head);
}

// Instances exercised by the full suite and the default corpus runs.
inline std::vector<std::string> default_corpus() {
  return {"trivial:7",  "example1",     "gcal:3",       "gcal:4",     "h1:4",
          "h2:4",       "h3:4",         "gprime:4,+1",  "gprime:4,-1", "hcal:3",
          "ical:a4",    "ical:s4",      "ical:dihedral,3", "weil1:3,4", "weil3a:3,3,4",
          "embed:9:example1", "signed_cycle", "d8mu2"};
}

}  // namespace spinacc
