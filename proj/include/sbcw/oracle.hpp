#pragma once

#include "sbcw/rational.hpp"

namespace sbcw {

// Straight-line lift of an arc on the universal cover: the segment from the
// origin to a primitive lattice point (x, y). Its gradient is y/x with
// x >= 0. Everything here is exact 64-bit integer arithmetic; coordinates
// are capped at 10^4 so every intermediate product fits.
class Segment {
 public:
  static Segment to_point(long long x, long long y);
  static Segment of_gradient(const Ratio& g);

  long long x() const { return x_; }
  long long y() const { return y_; }
  Ratio gradient() const;

 private:
  Segment(long long x, long long y) : x_(x), y_(y) {}

  long long x_;
  long long y_;
};

// Counts lines of the given direction through lattice points that cross the
// open segment transversally at a non-lattice point; -1 when the segment's
// own direction equals the family's (self-intersection convention). The
// family is enumerated by the integer offset of its line equation over the
// range where a line can meet the segment's bounding box.
long long crossing_count(const Segment& arc, const Ratio& family);
long long crossing_count(const Ratio& g, const Ratio& family);

// Same count with the family's lines generated from lattice points relative
// to a shifted base point; the family is translation invariant, so the
// result must not change.
long long crossing_count_from_base(const Segment& arc, const Ratio& family,
                                   long long base_x, long long base_y);

}  // namespace sbcw
