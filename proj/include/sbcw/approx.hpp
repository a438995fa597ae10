#pragma once

#include <string_view>

#include "sbcw/rational.hpp"

namespace sbcw {

// Exact decimal value num/den with den a power of ten.
struct Decimal {
  mpz_class num;
  mpz_class den;
};

// Accepts [+-]digits and [+-]digits.digits; no exponents.
Decimal parse_decimal(std::string_view text);

// The reduced p/q with q <= max_den closest to the target, by Stern-Brocot
// descent with run-length jumps. Ties go to the smaller denominator, then
// the smaller numerator. All comparisons are exact.
Ratio best_approx(const Decimal& target, const mpz_class& max_den);

}  // namespace sbcw
