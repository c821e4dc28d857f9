#include "curvecount/rational.hpp"

#include <cstdio>

namespace curvecount {

std::string fraction_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string decimal_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BigInt big_pow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

Rational rational_pow(const Rational& b, unsigned e) {
  Rational r = 1;
  Rational base = b;
  for (; e > 0; e >>= 1) {
    if (e & 1U) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

}  // namespace curvecount
