#include "wgcoe/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "wgcoe/errors.hpp"

namespace wgcoe::exact {

Polynomial::Polynomial(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::N() { return Polynomial{0, 1}; }

Polynomial Polynomial::linear(long a) { return Polynomial{a, 1}; }

Polynomial Polynomial::falling_factorial(unsigned k) {
  return rising_product(k, -1);
}

Polynomial Polynomial::rising_product(unsigned k, long step, long offset) {
  Polynomial p(1);
  for (unsigned i = 0; i < k; ++i) p *= linear(offset + static_cast<long>(i) * step);
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

BigRational Polynomial::leading() const {
  return c_.empty() ? BigRational(0) : c_.back();
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = *this;
  const int dd = d.degree();
  if (degree() < dd) return {Polynomial(), rem};
  std::vector<BigRational> q(static_cast<std::size_t>(degree() - dd + 1), BigRational(0));
  const BigRational lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    BigRational t = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = t;
    for (int k = 0; k <= dd; ++k) {
      rem.c_[static_cast<std::size_t>(k + shift)] -= t * d.c_[static_cast<std::size_t>(k)];
    }
    rem.trim();
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

namespace {

void append_term(std::ostringstream& os, const BigRational& c, int k, bool first) {
  BigRational a = abs(c);
  if (c < 0) {
    os << '-';
  } else if (!first) {
    os << '+';
  }
  const bool unit = (a == 1);
  if (k == 0) {
    os << a.get_str();
    return;
  }
  if (!unit) os << a.get_str() << '*';
  os << 'N';
  if (k > 1) os << '^' << k;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    append_term(os, c, k, first);
    first = false;
  }
  return os.str();
}

std::pair<IntCoefficients, BigRational> primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {{}, BigRational(0)};
  BigInt lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntCoefficients ints;
  ints.reserve(p.coefficients().size());
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  // p = (g / lcm_den) * primitive
  return {std::move(ints), make_rational(g, lcm_den)};
}

Polynomial from_integers(const IntCoefficients& c) {
  std::vector<BigRational> q;
  q.reserve(c.size());
  for (const auto& v : c) q.emplace_back(v);
  return Polynomial(std::move(q));
}

namespace {

void trim_int(IntCoefficients& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(IntCoefficients& a) {
  trim_int(a);
  if (a.empty()) return;
  BigInt g = 0;
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& v : a) v /= g;
}

// Pseudo-remainder of a by b (deg a >= deg b), up to a nonzero integer factor.
IntCoefficients pseudo_remainder(IntCoefficients a, const IntCoefficients& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt la = a.back();
    for (auto& v : a) v *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim_int(a);
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  IntCoefficients x = primitive_part(a).first;
  IntCoefficients y = primitive_part(b).first;
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntCoefficients r = pseudo_remainder(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  Polynomial g = from_integers(x);
  g *= BigRational(1) / g.leading();
  return g;
}

}  // namespace wgcoe::exact
