#include "sbcw/rational.hpp"

#include <cctype>
#include <ostream>

namespace sbcw {

Ratio Ratio::reduce(mpz_class n, mpz_class d) {
  if (n == 0 && d == 0) fail(errc::both_zero, "0/0 has no reduced expression");
  if (d == 0) return Ratio(1, 0, 0);  // every n/0 is the one infinity
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpz_class g = gcd(n, d);
  n /= g;
  d /= g;
  return Ratio(std::move(n), std::move(d), 0);
}

Ratio Ratio::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
    fail(errc::parse_error, "expected \"n/d\", got \"" + std::string(text) + "\"");
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = text.substr(slash + 1);
  auto digits = [](std::string_view s, bool sign_ok) {
    if (sign_ok && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(ns, true) || !digits(ds, false))
    fail(errc::parse_error, "expected \"n/d\", got \"" + std::string(text) + "\"");
  return reduce(mpz_class(std::string(ns)), mpz_class(std::string(ds)));
}

std::string Ratio::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

mpz_class cross_det(const Ratio& x, const Ratio& y) {
  mpz_class det = x.num() * y.den() - y.num() * x.den();
  return det;
}

namespace {

void require_neighbors(const Ratio& x, const Ratio& y, const char* op) {
  mpz_class det = cross_det(x, y);
  if (det != 1 && det != -1)
    fail(errc::not_neighbors,
         std::string(op) + " needs |cross_det| = 1, got " + det.get_str() +
             " for " + x.str() + ", " + y.str());
}

}  // namespace

Ratio mediant(const Ratio& x, const Ratio& y) {
  require_neighbors(x, y, "mediant");
  mpz_class n = x.num() + y.num();
  mpz_class d = x.den() + y.den();
  return Ratio(std::move(n), std::move(d), 0);  // already reduced
}

Ratio farey_difference(const Ratio& x, const Ratio& y) {
  require_neighbors(x, y, "farey_difference");
  return Ratio::reduce(y.num() - x.num(), y.den() - x.den());
}

int compare(const Ratio& x, const Ratio& y) {
  // Cross multiplication is order-correct for den >= 0, including 1/0.
  return sgn(cross_det(x, y));
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) {
  return os << r.num() << '/' << r.den();
}

}  // namespace sbcw
