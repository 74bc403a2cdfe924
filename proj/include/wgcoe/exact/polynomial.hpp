#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wgcoe/exact/rational.hpp"

namespace wgcoe::exact {

/// Univariate polynomial in the dimension symbol N with exact rational
/// coefficients. Coefficients are indexed by degree; trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients and
/// degree() == -1.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const BigRational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(BigRational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  // The monomial N.
  static Polynomial N();
  // N + a.
  static Polynomial linear(long a);
  // N (N-1) ... (N-k+1); 1 when k == 0.
  static Polynomial falling_factorial(unsigned k);
  // N (N+step) ... (N+(k-1)step); 1 when k == 0.
  static Polynomial rising_product(unsigned k, long step = 1, long offset = 0);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coefficients() const { return c_; }
  BigRational coefficient(int k) const;
  BigRational leading() const;

  BigRational operator()(const BigRational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  bool operator==(const Polynomial& o) const = default;

  // Euclidean division over Q: *this = q * d + r with deg r < deg d.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  // Division that must be exact; throws DomainError otherwise.
  Polynomial divide_exact(const Polynomial& d) const;

  Polynomial pow(unsigned e) const;

  // Expanded rendering in descending powers, e.g. "N^4-8*N^2+6".
  std::string to_string() const;

private:
  void trim();
  std::vector<BigRational> c_;
};

// Integer polynomial helpers used by gcd and rendering.
using IntCoefficients = std::vector<BigInt>;

// Scales p by a positive rational so the result has coprime integer
// coefficients with positive leading coefficient. Returns (primitive, scale)
// where p == scale * primitive.
std::pair<IntCoefficients, BigRational> primitive_part(const Polynomial& p);

Polynomial from_integers(const IntCoefficients& c);

// Monic gcd over Q, computed with a primitive pseudo-remainder sequence over
// the integers. gcd(0, 0) == 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace wgcoe::exact
