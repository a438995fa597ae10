#include "sbcw/approx.hpp"

#include <cctype>

namespace sbcw {

Decimal parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty())
    fail(errc::parse_error, "expected a decimal number, got \"" + std::string(text) + "\"");
  if (dot != std::string_view::npos && frac.empty())
    fail(errc::parse_error, "trailing '.' in \"" + std::string(text) + "\"");
  std::string digits;
  digits.reserve(whole.size() + frac.size());
  for (std::string_view part : {whole, frac})
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(errc::parse_error, "bad decimal digit in \"" + std::string(text) + "\"");
      digits.push_back(c);
    }
  Decimal d;
  d.num = mpz_class(digits.empty() ? "0" : digits);
  if (negative) d.num = -d.num;
  mpz_class ten = 10;
  mpz_pow_ui(d.den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(frac.size()));
  return d;
}

namespace {

struct Frac {
  mpz_class n;
  mpz_class d;
};

// f > 0 when the target A/B lies above x, f < 0 below, f == 0 at x.
mpz_class above(const mpz_class& a, const mpz_class& b, const Frac& x) {
  mpz_class v = a * x.d - b * x.n;
  return v;
}

}  // namespace

Ratio best_approx(const Decimal& target, const mpz_class& max_den) {
  if (max_den < 1) fail(errc::out_of_domain, "max_den must be at least 1");
  if (target.num == 0) return Ratio::reduce(0, 1);

  bool negative = target.num < 0;
  mpz_class a = abs(target.num);
  const mpz_class& b = target.den;

  // Stern-Brocot descent on |target| with whole runs taken at once; the
  // interval endpoints are always the two best one-sided approximants.
  Frac lo{0, 1};
  Frac hi{1, 0};
  while (true) {
    Frac med{lo.n + hi.n, lo.d + hi.d};
    if (med.d > max_den) break;
    mpz_class side = above(a, b, med);
    if (side == 0) return Ratio::reduce(negative ? mpz_class(-med.n) : med.n, med.d);
    mpz_class flo = above(a, b, lo);   // > 0, target above lo
    mpz_class fhi = -above(a, b, hi);  // > 0, target below hi
    if (side < 0) {
      // Target below the mediant: run of Left steps hi <- t*lo + hi while
      // the target stays strictly below, i.e. t*flo < fhi. The run length
      // is at least 1 here and the denominator cap keeps it feasible.
      mpz_class t = (fhi - 1) / flo;
      if (lo.d > 0) {
        mpz_class t_den = (max_den - hi.d) / lo.d;
        if (t > t_den) t = t_den;
      }
      hi.n += t * lo.n;
      hi.d += t * lo.d;
    } else {
      // Target above the mediant: run of Right steps lo <- lo + t*hi.
      mpz_class t = (flo - 1) / fhi;
      if (hi.d > 0) {
        mpz_class t_den = (max_den - lo.d) / hi.d;
        if (t > t_den) t = t_den;
      }
      lo.n += t * hi.n;
      lo.d += t * hi.d;
    }
  }

  // Any other fraction with denominator <= max_den lies outside (lo, hi),
  // so the answer is the closer endpoint; hi is finite here because a
  // mediant with the infinite endpoint never exceeds the denominator cap.
  Frac cand1 = negative ? Frac{-hi.n, hi.d} : Frac{lo.n, lo.d};
  Frac cand2 = negative ? Frac{-lo.n, lo.d} : Frac{hi.n, hi.d};
  // |target - c| = |f(c)| / (b * c.d); compare via cross multiplication.
  mpz_class e1 = abs(target.num * cand1.d - target.den * cand1.n) * cand2.d;
  mpz_class e2 = abs(target.num * cand2.d - target.den * cand2.n) * cand1.d;
  if (e1 != e2) return Ratio::reduce(e1 < e2 ? cand1.n : cand2.n, e1 < e2 ? cand1.d : cand2.d);
  if (cand1.d != cand2.d)
    return cand1.d < cand2.d ? Ratio::reduce(cand1.n, cand1.d) : Ratio::reduce(cand2.n, cand2.d);
  return cand1.n < cand2.n ? Ratio::reduce(cand1.n, cand1.d) : Ratio::reduce(cand2.n, cand2.d);
}

}  // namespace sbcw
