#ifndef PERMKIT_NUMERIC_HPP
#define PERMKIT_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permkit {

// All group orders, counts and averages are exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt &v) { return v.str(); }

/// Canonical "num/den" form, always with an explicit denominator ("9/1").
inline std::string to_string(const Rational &v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

inline BigInt big_pow(const BigInt &base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

/// Number of bits in v (0 for v == 0).
inline unsigned bit_length(const BigInt &v) {
  return v == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

} // namespace permkit

#endif
