#pragma once

// Exact rational arithmetic and outward-rounded rational intervals.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cantordim {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// 2^e for any integer exponent, exactly.
Rational pow2(long e);
Integer pow2_int(unsigned long e);

/// Parses "p/q", "p", or a finite decimal such as "0.125".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// floor(log2 q) for q > 0.
long floor_log2(const Rational& q);
/// ceil(log2 q) for q > 0.
long ceil_log2(const Rational& q);
/// log2 of a positive integer as a double (estimates only).
double log2_double(const Integer& z);
double to_double(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Closed rational interval [lo, hi]. Degenerate intervals are exact values.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  Interval(Rational l, Rational h);

  bool exact() const { return lo == hi; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }

  friend Interval operator+(const Interval& a, const Interval& b);
  /// Product of intervals of nonnegative numbers.
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval scale(const Interval& a, const Rational& factor);

/// x^(1/q) for x >= 0, bracketed with absolute error below 2^-bits relative to the leading
/// binary digit of the result. Exact when the root is a representable dyadic.
Interval root_interval(const Rational& x, unsigned long q, unsigned bits = kDefaultPrecisionBits);

/// 2^e for a rational exponent e, outward rounded.
Interval pow2_interval(const Rational& e, unsigned bits = kDefaultPrecisionBits);

/// x^t for x > 0 and rational t, outward rounded.
Interval pow_interval(const Rational& x, const Rational& t, unsigned bits = kDefaultPrecisionBits);

}  // namespace cantordim
