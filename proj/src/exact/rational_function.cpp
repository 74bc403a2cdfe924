#include "wgcoe/exact/rational_function.hpp"

#include <sstream>

#include "wgcoe/errors.hpp"

namespace wgcoe::exact {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  Polynomial g = gcd(num, den);
  Polynomial n = num.divide_exact(g);
  Polynomial d = den.divide_exact(g);
  BigRational scale = BigRational(1) / d.leading();
  n *= scale;
  d *= scale;
  return RationalFunction(std::move(n), std::move(d), 0);
}

BigRational RationalFunction::eval(long long N) const {
  BigRational x(static_cast<long>(N));
  BigRational d = den_(x);
  if (d == 0) throw PoleError(N);
  return num_(x) / d;
}

BigRational RationalFunction::eval(const BigRational& N) const {
  BigRational d = den_(N);
  if (d == 0) throw DomainError("pole at N = " + N.get_str());
  return num_(N) / d;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = normalize(num_ + o.num_, den_);
  } else {
    *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  *this = normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  *this = normalize(num_ * o.den_, den_ * o.num_);
  return *this;
}

long leading_exponent(const RationalFunction& f) {
  return f.numerator().degree() - f.denominator().degree();
}

bool LaurentSeries::is_zero() const {
  for (const auto& c : coefficients) {
    if (c != 0) return false;
  }
  return true;
}

BigRational LaurentSeries::coefficient_of(long exponent) const {
  const long k = leading_exponent - exponent;
  if (k < 0 || k >= static_cast<long>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(k)];
}

RationalFunction LaurentSeries::resum() const {
  if (coefficients.empty()) return RationalFunction();
  // sum_k c_k N^(e-k) = (sum_k c_k N^(K-1-k)) * N^(e-K+1)
  const long K = static_cast<long>(coefficients.size());
  std::vector<BigRational> c(static_cast<std::size_t>(K), BigRational(0));
  for (long k = 0; k < K; ++k) c[static_cast<std::size_t>(K - 1 - k)] = coefficients[static_cast<std::size_t>(k)];
  Polynomial p(std::move(c));
  const long shift = leading_exponent - K + 1;
  if (shift >= 0) return RationalFunction(p * Polynomial::N().pow(static_cast<unsigned>(shift)));
  return RationalFunction::normalize(p, Polynomial::N().pow(static_cast<unsigned>(-shift)));
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const auto& c = coefficients[k];
    if (c == 0) continue;
    const long e = leading_exponent - static_cast<long>(k);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigRational a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'N';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

LaurentSeries series(const RationalFunction& f, std::size_t order) {
  if (order == 0) throw DomainError("series order must be positive");
  LaurentSeries s;
  s.coefficients.assign(order, BigRational(0));
  if (f.is_zero()) return s;
  const auto& P = f.numerator().coefficients();
  const auto& Q = f.denominator().coefficients();
  const std::size_t p = P.size() - 1;
  const std::size_t q = Q.size() - 1;
  s.leading_exponent = static_cast<long>(p) - static_cast<long>(q);
  // In x = 1/N: P = N^p a(x), Q = N^q b(x) with a_k = P[p-k], b_k = Q[q-k].
  auto a = [&](std::size_t k) { return k <= p ? P[p - k] : BigRational(0); };
  auto b = [&](std::size_t k) { return k <= q ? Q[q - k] : BigRational(0); };
  const BigRational b0 = b(0);
  for (std::size_t k = 0; k < order; ++k) {
    BigRational acc = a(k);
    for (std::size_t i = 1; i <= k && i <= q; ++i) acc -= b(i) * s.coefficients[k - i];
    s.coefficients[k] = acc / b0;
  }
  return s;
}

}  // namespace wgcoe::exact
