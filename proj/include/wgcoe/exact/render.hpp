#pragma once

#include <string>
#include <utility>

#include "wgcoe/exact/rational_function.hpp"

namespace wgcoe::exact {

// Canonical human-readable form, e.g. "(N+2)/(N*(N+1)*(N+3))" or
// "-5/(N*(N^2-1)*(N^2-4)*(N^2-9))".
//
// Both sides are split into a rational constant, a power of N, linear
// factors (N+a) for integer roots with |root| <= kRootSearchBound, and a
// residual polynomial printed expanded. Matching roots +r and -r combine
// into N^2-r^2. Factors are ordered by |root|, then degree, then sign.
std::string render(const RationalFunction& f);
std::string render(const Polynomial& p);

inline constexpr long kRootSearchBound = 64;

// Integer coefficient arrays (ascending degree) with f == num / den, both
// primitive together and den having positive leading coefficient.
struct IntegerForm {
  IntCoefficients numerator;
  IntCoefficients denominator;
};

IntegerForm integer_form(const RationalFunction& f);
RationalFunction from_integer_form(const IntegerForm& form);

}  // namespace wgcoe::exact
