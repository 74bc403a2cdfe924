#pragma once

#include <string>
#include <vector>

#include "wgcoe/exact/polynomial.hpp"

namespace wgcoe::exact {

/// Exact ratio of polynomials in N, kept canonical: numerator and
/// denominator are coprime and the denominator is monic. Two construction
/// paths of the same function therefore compare equal structurally.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT

  // Reduced canonical representative of num/den. Throws DomainError when
  // den is the zero polynomial.
  static RationalFunction normalize(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Exact value at N. Throws PoleError when N is a root of the denominator.
  BigRational eval(long long N) const;
  BigRational eval(const BigRational& N) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  bool operator==(const RationalFunction& o) const = default;

private:
  RationalFunction(Polynomial num, Polynomial den, int /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Truncated expansion in descending powers of N:
///   sum_k coefficients[k] * N^(leading_exponent - k),  k < order.
struct LaurentSeries {
  long leading_exponent = 0;
  std::vector<BigRational> coefficients;

  std::size_t order() const { return coefficients.size(); }
  bool is_zero() const;
  BigRational coefficient_of(long exponent) const;

  // The truncated sum as an exact rational function.
  RationalFunction resum() const;

  // "2*N^-2 - 6*N^-3"
  std::string to_string() const;

  bool operator==(const LaurentSeries&) const = default;
};

// Expansion of f at N -> infinity with `order` retained terms, by exact
// long division in 1/N. Throws DomainError when order == 0.
LaurentSeries series(const RationalFunction& f, std::size_t order);

// Exponent of the leading power of N (deg num - deg den). Undefined for 0.
long leading_exponent(const RationalFunction& f);

}  // namespace wgcoe::exact
