#pragma once

#include <string>

#include "sbcw/sweep.hpp"

namespace sbcw {

struct Report {
  std::string suite;
  bool pass = true;
  long long checked = 0;
  std::string counterexample;  // empty when pass

  std::string line() const;  // "main1: PASS checked=8191"
};

// g of the vector assigned at every vertex equals the Stern-Brocot value.
Report verify_main1(int depth, ExecMode mode = ExecMode::parallel);

// h of the vector assigned at every vertex equals the Calkin-Wilf value.
Report verify_main2(int depth, ExecMode mode = ExecMode::parallel);

// Three routes to the matrix at a random word agree: the gradient walk, the
// row-flip recurrence, and the transposed column-flip recurrence; the
// transpose entries match intersection numbers with the roles swapped.
Report verify_duality(int samples, int max_len, ExecMode mode = ExecMode::parallel);

// Along every edge labeled k: entries other than k are unchanged, entry k
// becomes the strict maximum at the deeper vertex and was not maximal at the
// shallower one; the h-walk's unused index equals the incoming edge label.
Report verify_maximality(int depth, ExecMode mode = ExecMode::parallel);

// The root matrix classifies as (i) and every flip follows the six-arrow
// form diagram.
Report verify_forms(int depth, ExecMode mode = ExecMode::parallel);

// Geometric crossing counts against the initial arcs equal
// [p-1, q-1, p+q-1] for every reduced p/q with p+q <= bound.
Report verify_int_inc(long long bound, ExecMode mode = ExecMode::parallel);

// crossing_count(g, e) == |cross_det(g, e)| - 1 for all reduced pairs with
// |entries| <= bound.
Report verify_det_law(long long bound, ExecMode mode = ExecMode::parallel);

// Christoffel pair tree: entries and concatenations are Christoffel words,
// |u|/|v| projects to Calkin-Wilf, #b/#a of uv projects to Stern-Brocot,
// det_pair == 1 everywhere.
Report verify_christoffel(int depth, ExecMode mode = ExecMode::parallel);

// Cohn tree: same checks with the two projections swapped.
Report verify_cohn(int depth, ExecMode mode = ExecMode::parallel);

// Both substitutions preserve Christoffel words up to max_len, and every
// Christoffel word of non-degenerate slope with length <= max_len is reached
// from "ab" by some substitution sequence.
Report verify_closure(long long max_len, ExecMode mode = ExecMode::parallel);

}  // namespace sbcw
