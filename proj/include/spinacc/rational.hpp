#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "spinacc/error.hpp"

namespace spinacc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return rat_den(x) == 1; }

// Nonnegative remainder of a cpp_int modulo a machine prime.
inline std::uint64_t mod_u64(const Int& a, std::uint64_t p) {
  Int r = a % Int(p);
  if (r < 0) r += Int(p);
  return static_cast<std::uint64_t>(r);
}

inline std::string rat_to_string(const Rat& x) { return x.str(); }

inline Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw input_error("not a rational literal: '" + s + "'");
  }
}

// Integer square root test. Returns true and sets root when n is a perfect square.
inline bool perfect_square(const Int& n, Int& root) {
  if (n < 0) return false;
  if (n == 0) { root = 0; return true; }
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

// Exact square root of a nonnegative rational, when one exists in Q.
inline bool rational_sqrt(const Rat& x, Rat& out) {
  Int rn, rd;
  if (!perfect_square(rat_num(x), rn)) return false;
  if (!perfect_square(rat_den(x), rd)) return false;
  out = Rat(rn, rd);
  return true;
}

}  // namespace spinacc
