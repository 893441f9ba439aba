#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

namespace lawrence {

// Exact arithmetic everywhere; no floating point in any computation path.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline int sign_of(const Int& a) { return a.sign(); }
inline int sign_of(const Rat& a) { return a.sign(); }

// Floor division: largest q with q*b <= a (b != 0).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace lawrence
