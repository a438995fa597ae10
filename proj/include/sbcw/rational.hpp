#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "sbcw/error.hpp"

namespace sbcw {

// Reduced fraction num/den over arbitrary-precision integers with den >= 0
// and gcd(|num|, den) = 1. The single infinite value is 1/0; it compares
// greater than every finite value. There is no separate -1/0: reduce()
// collapses every n/0 to 1/0.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}

  static Ratio reduce(mpz_class n, mpz_class d);

  // Accepts exactly the textual form produced by str(): "n/d" with an
  // optional leading '-' on the numerator.
  static Ratio parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  std::string str() const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }

 private:
  Ratio(mpz_class n, mpz_class d, int) : num_(std::move(n)), den_(std::move(d)) {}

  mpz_class num_;
  mpz_class den_;

  friend Ratio mediant(const Ratio& x, const Ratio& y);
};

// x.num*y.den - y.num*x.den. Antisymmetric; zero iff x == y.
mpz_class cross_det(const Ratio& x, const Ratio& y);

// Farey-neighbor sum (x.num+y.num)/(x.den+y.den). Requires |cross_det| = 1,
// which already makes the raw sum reduced.
Ratio mediant(const Ratio& x, const Ratio& y);

// reduce(y.num - x.num, y.den - x.den); the arc completing a triangulation
// on the other side of the {x, y} edge. Symmetric in x and y because reduce
// normalizes the sign. Requires |cross_det| = 1.
Ratio farey_difference(const Ratio& x, const Ratio& y);

// -1, 0, +1 ordering by rational value with 1/0 maximal.
int compare(const Ratio& x, const Ratio& y);

inline bool operator<(const Ratio& a, const Ratio& b) { return compare(a, b) < 0; }
inline bool operator>(const Ratio& a, const Ratio& b) { return compare(a, b) > 0; }
inline bool operator<=(const Ratio& a, const Ratio& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Ratio& a, const Ratio& b) { return compare(a, b) >= 0; }

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace sbcw
