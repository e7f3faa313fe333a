#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace asymlat {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as they are built through
// the helpers below; no rounding happens anywhere in the library.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else
// (including a zero denominator).
Rational parse_rational(const std::string& text);

// Canonical serialization: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Rational extended with negative infinity, used for the decomposition
// parameters s0 and t0. NEG_INF compares strictly below every rational.
class ExtendedScalar {
 public:
  ExtendedScalar() : neg_inf_(true) {}
  ExtendedScalar(Rational v) : neg_inf_(false), value_(std::move(v)) {}

  static ExtendedScalar neg_infinity() { return ExtendedScalar(); }

  bool is_neg_infinity() const { return neg_inf_; }
  const Rational& finite() const {
    if (neg_inf_) throw std::logic_error("finite() on -inf");
    return value_;
  }

  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
    if (a.neg_inf_ != b.neg_inf_) return false;
    return a.neg_inf_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtendedScalar& a, const ExtendedScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const ExtendedScalar& a, const ExtendedScalar& b) {
    if (a.neg_inf_) return !b.neg_inf_;
    if (b.neg_inf_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedScalar& a, const ExtendedScalar& b) {
    return a < b || a == b;
  }

 private:
  bool neg_inf_;
  Rational value_;
};

// Serializes a rational or the string "-inf".
std::string to_string(const ExtendedScalar& s);
ExtendedScalar parse_extended(const std::string& text);

}  // namespace asymlat
