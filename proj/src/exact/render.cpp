#include "wgcoe/exact/render.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <tuple>
#include <vector>

#include "wgcoe/errors.hpp"

namespace wgcoe::exact {
namespace {

struct Factor {
  long abs_root;
  int degree;
  int sign;
  std::string text;
  unsigned power;
  bool atomic;  // renders without surrounding parentheses
};

BigInt eval_int(const IntCoefficients& a, long x) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides a by (N - r); the caller guarantees r is a root.
IntCoefficients deflate(const IntCoefficients& a, long r) {
  const std::size_t n = a.size() - 1;
  IntCoefficients b(n);
  BigInt carry = 0;
  for (std::size_t k = n; k >= 1; --k) {
    carry = a[k] + carry * r;
    b[k - 1] = carry;
  }
  return b;
}

std::string int_poly_string(const IntCoefficients& a) {
  return from_integers(a).to_string();
}

std::vector<Factor> split(IntCoefficients p) {
  std::vector<Factor> out;
  unsigned npow = 0;
  std::size_t lead_zeros = 0;
  while (lead_zeros < p.size() && p[lead_zeros] == 0) ++lead_zeros;
  npow = static_cast<unsigned>(lead_zeros);
  p.erase(p.begin(), p.begin() + static_cast<long>(lead_zeros));
  if (npow > 0) out.push_back({0, 1, 0, "N", npow, true});

  std::map<long, unsigned> mult;
  for (long r = 1; r <= kRootSearchBound && p.size() > 1; ++r) {
    for (long cand : {r, -r}) {
      while (p.size() > 1 && mpz_divisible_ui_p(p[0].get_mpz_t(), static_cast<unsigned long>(r)) &&
             eval_int(p, cand) == 0) {
        p = deflate(p, cand);
        ++mult[cand];
      }
    }
  }
  for (long r = 1; r <= kRootSearchBound; ++r) {
    const unsigned up = mult.count(r) ? mult[r] : 0;
    const unsigned down = mult.count(-r) ? mult[-r] : 0;
    const unsigned pairs = std::min(up, down);
    const std::string rs = std::to_string(r);
    if (up > pairs) out.push_back({r, 1, 1, "(N-" + rs + ")", up - pairs, false});
    if (down > pairs) out.push_back({r, 1, -1, "(N+" + rs + ")", down - pairs, false});
    if (pairs > 0) {
      out.push_back({r, 2, 0, "(N^2-" + std::to_string(r * r) + ")", pairs, false});
    }
  }
  if (p.size() > 1) {
    out.push_back({LONG_MAX, static_cast<int>(p.size()) - 1, 0, "(" + int_poly_string(p) + ")", 1, false});
  } else if (p.size() == 1 && p[0] != 1) {
    // primitive input with a constant residual can only be +-1
    throw DomainError("internal: non-primitive residual in render");
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    return std::tie(a.abs_root, a.degree, a.sign) < std::tie(b.abs_root, b.degree, b.sign);
  });
  return out;
}

std::string factor_text(const Factor& f) {
  if (f.power == 1) return f.text;
  return f.text + "^" + std::to_string(f.power);
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += '*';
    s += parts[k];
  }
  return s;
}

}  // namespace

std::string render(const RationalFunction& f) {
  if (f.is_zero()) return "0";
  auto [pn, sn] = primitive_part(f.numerator());
  auto [pd, sd] = primitive_part(f.denominator());
  const BigRational c = sn / sd;
  const BigInt p = c.get_num();
  const BigInt q = c.get_den();

  const auto nf = split(std::move(pn));
  const auto df = split(std::move(pd));

  std::string out;
  if (nf.empty()) {
    out = p.get_str();
  } else {
    if (p == -1) {
      out = "-";
    } else if (p != 1) {
      out = p.get_str() + "*";
    }
    std::vector<std::string> parts;
    for (const auto& x : nf) parts.push_back(factor_text(x));
    std::string body = join(parts);
    // A lone polynomial needs no parentheses.
    if (df.empty() && q == 1 && nf.size() == 1 && nf[0].power == 1 && !nf[0].atomic && p == 1) {
      body = body.substr(1, body.size() - 2);
    }
    out += body;
  }

  std::vector<std::string> dparts;
  if (q != 1) dparts.push_back(q.get_str());
  for (const auto& x : df) dparts.push_back(factor_text(x));
  if (dparts.empty()) return out;
  if (dparts.size() == 1) return out + "/" + dparts[0];
  return out + "/(" + join(dparts) + ")";
}

std::string render(const Polynomial& p) { return render(RationalFunction(p)); }

IntegerForm integer_form(const RationalFunction& f) {
  if (f.is_zero()) return {{}, {BigInt(1)}};
  auto [pn, sn] = primitive_part(f.numerator());
  auto [pd, sd] = primitive_part(f.denominator());
  const BigRational c = sn / sd;
  for (auto& v : pn) v *= c.get_num();
  for (auto& v : pd) v *= c.get_den();
  return {std::move(pn), std::move(pd)};
}

RationalFunction from_integer_form(const IntegerForm& form) {
  return RationalFunction::normalize(from_integers(form.numerator), from_integers(form.denominator));
}

}  // namespace wgcoe::exact
