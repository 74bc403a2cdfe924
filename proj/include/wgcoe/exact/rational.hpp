#pragma once

#include <gmpxx.h>

#include <string>

namespace wgcoe::exact {

using BigInt = mpz_class;

// Arbitrary-precision rational, always kept in canonical form
// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
using BigRational = mpq_class;

// Builds num/den in canonical form. Throws DomainError when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned n);

// (2k-1)!! with (-1)!! = 1.
BigInt double_factorial_odd(unsigned k);

}  // namespace wgcoe::exact
