#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linkgate {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Integer square root; returns false if a is not a perfect square.
inline bool perfect_square(const Int& a, Int& root) {
  if (a < 0) return false;
  if (a == 0) { root = 0; return true; }
  Int lo = 0, hi = a + 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (mid * mid <= a) lo = mid; else hi = mid;
  }
  root = lo;
  return lo * lo == a;
}

inline bool perfect_square(const Int& a) {
  Int root;
  return perfect_square(a, root);
}

// Floor square root of a nonnegative integer.
inline Int sqrt_int(const Int& a) {
  Int root;
  perfect_square(a, root);
  return root;
}

}  // namespace linkgate
