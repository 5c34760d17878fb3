#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace acaf {

// Exact rational scalar. All algebraic identities in this library are
// asserted with equality, never with a tolerance.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Serialized as "p" or "p/q", matching the report/problem file format.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace acaf
