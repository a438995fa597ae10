#include "sbcw/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace sbcw {

namespace {

constexpr long long kCoordCap = 10'000;

long long narrow(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) fail(errc::overflow, std::string(what) + " exceeds 64 bits");
  long long v = z.get_si();
  if (v > kCoordCap || v < -kCoordCap)
    fail(errc::overflow,
         std::string(what) + " = " + std::to_string(v) + " exceeds the oracle cap " +
             std::to_string(kCoordCap));
  return v;
}

// Lines of direction r/s through lattice points are s*y - r*x = c, one per
// integer c; a base lattice point (bx, by) re-indexes the same family as
// c = (s*by - r*bx) + j over integer j.
long long count_crossings(long long px, long long py, long long r, long long s,
                          long long base_c) {
  long long delta = s * py - r * px;  // f(endpoint) where f(x,y) = s*y - r*x
  if (delta == 0) return -1;          // same direction: the arc itself

  // A line meets the closed bounding box iff its offset lies between the
  // extreme corner values of f.
  long long corners[4] = {0, -r * px, s * py, delta};
  long long cmin = *std::min_element(corners, corners + 4);
  long long cmax = *std::max_element(corners, corners + 4);

  long long crossings = 0;
  for (long long j = cmin - base_c; j <= cmax - base_c; ++j) {
    long long c = base_c + j;
    // Strict side test: the segment's endpoints have f-values 0 and delta.
    long long s0 = -c;
    long long s1 = delta - c;
    if (s0 == 0 || s1 == 0) continue;    // meets an endpoint (a puncture)
    if ((s0 > 0) == (s1 > 0)) continue;  // same side: no crossing
    // Crossing point is (c*px/delta, c*py/delta); a lattice point iff delta
    // divides both coordinate numerators.
    if ((c * px) % delta == 0 && (c * py) % delta == 0) continue;
    ++crossings;
  }
  return crossings;
}

}  // namespace

Segment Segment::to_point(long long x, long long y) {
  if (x == 0 && y == 0) fail(errc::not_primitive, "segment endpoint is the origin");
  if (x < 0) fail(errc::not_primitive, "segment endpoint needs x >= 0");
  if (x > kCoordCap || y > kCoordCap || y < -kCoordCap)
    fail(errc::overflow, "segment endpoint exceeds the oracle cap");
  if (std::gcd(x, y < 0 ? -y : y) != 1)
    fail(errc::not_primitive, "segment to (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") passes through interior lattice points");
  return Segment(x, y);
}

Segment Segment::of_gradient(const Ratio& g) {
  return to_point(narrow(g.den(), "segment x"), narrow(g.num(), "segment y"));
}

Ratio Segment::gradient() const { return Ratio::reduce(y_, x_); }

long long crossing_count(const Segment& arc, const Ratio& family) {
  long long r = narrow(family.num(), "family numerator");
  long long s = narrow(family.den(), "family denominator");
  return count_crossings(arc.x(), arc.y(), r, s, 0);
}

long long crossing_count(const Ratio& g, const Ratio& family) {
  return crossing_count(Segment::of_gradient(g), family);
}

long long crossing_count_from_base(const Segment& arc, const Ratio& family,
                                   long long base_x, long long base_y) {
  long long r = narrow(family.num(), "family numerator");
  long long s = narrow(family.den(), "family denominator");
  if (base_x > kCoordCap || base_x < -kCoordCap || base_y > kCoordCap || base_y < -kCoordCap)
    fail(errc::overflow, "base point exceeds the oracle cap");
  return count_crossings(arc.x(), arc.y(), r, s, s * base_y - r * base_x);
}

}  // namespace sbcw
