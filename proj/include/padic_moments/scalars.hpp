#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

#include "padic_moments/errors.hpp"

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

// Returned by valuation() for zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

bool is_prime(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer power(const Integer& base, unsigned long exponent);
Rational power(const Rational& base, long exponent);

// B_n with sum B_n x^n / n! = x / (e^x - 1), so B_1 = -1/2.
Rational bernoulli(unsigned n);

// Element of Z/p^N; digits are kept least significant first.
struct PadicInteger {
  unsigned long p = 2;
  int precision = 1;
  Integer residue;

  std::vector<unsigned long> digits() const;
  // Most significant digit first, e.g. "2220" for 78 at p = 3, N = 4.
  std::string digit_string() const;
  // digit_string() followed by p in subscript digits, e.g. "2220₃".
  std::string to_string() const;

  bool operator==(const PadicInteger& other) const = default;
};

std::string subscript(unsigned long n);

PadicInteger reduce(const Rational& r, unsigned long p, int precision);

long valuation(const Rational& r, unsigned long p);
long valuation(const Integer& n, unsigned long p);

// Partial sum of log(1 + (c - 1)) that is correct modulo p^precision.
Rational padic_log(const Rational& c, unsigned long p, int precision);

// "num/den", denominator always present.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace padic
