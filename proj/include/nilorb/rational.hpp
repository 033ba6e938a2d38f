#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nilorb {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Least common multiple of the denominators of a vector (always positive).
inline Int denominator_lcm(const RatVec& v) {
  Int m = 1;
  for (const Rat& q : v) {
    Int d = q.get_den();
    m = lcm(m, d);
  }
  return m;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace nilorb
