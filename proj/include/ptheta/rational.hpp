#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace ptheta {

/* et_off: plain value semantics, no expression templates. Fusion buys
 * nothing for GMP rationals, and expressions that outlive their operands
 * (e.g. returning `2 * s` from a lambda) are dangling-reference bugs. */
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

/* Exact arbitrary-precision rational over GMP. GMP keeps values canonical
 * (lowest terms, positive denominator) through arithmetic as long as the
 * inputs are canonical, so every entry point that builds a Rational from
 * raw numerator/denominator data must go through rational_from_parts or
 * rational_from_string below. */
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// num/den in any form -> canonical rational; den must be nonzero.
Rational rational_from_parts(const Int& num, const Int& den);

// Parses "p" or "p/q" (optional sign on either part) and canonicalizes.
Rational rational_from_string(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

bool is_integer(const Rational& r);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

}  // namespace ptheta
