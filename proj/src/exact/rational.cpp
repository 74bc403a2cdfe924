#include "wgcoe/exact/rational.hpp"

#include "wgcoe/errors.hpp"

namespace wgcoe::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial_odd(unsigned k) {
  BigInt r = 1;
  for (unsigned j = 1; j <= k; ++j) r *= 2 * j - 1;
  return r;
}

}  // namespace wgcoe::exact
