#ifndef MINORB_RATIONAL_HPP
#define MINORB_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace minorb {

// All arithmetic in this library is exact. Rat is an arbitrary-precision
// rational kept in canonical form by GMP.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

using QVec = std::vector<Rat>;

}  // namespace minorb

#endif
