#pragma once

#include <array>
#include <string>

#include "sbcw/classic_trees.hpp"
#include "sbcw/rational.hpp"
#include "sbcw/treewalk.hpp"

namespace sbcw {

// Crossing counts of one arc with the three initial arcs; an arc counts -1
// against itself.
struct IntersectionVector {
  std::array<mpz_class, 3> d;

  const mpz_class& at(int k) const { return d[k - 1]; }  // k in {1,2,3}
  mpz_class& at(int k) { return d[k - 1]; }

  std::string str() const;  // "[0,0,1]"

  friend bool operator==(const IntersectionVector&, const IntersectionVector&) = default;
};

// Rows are the intersection vectors of the moving triangulation's arcs.
struct IntersectionMatrix {
  std::array<std::array<mpz_class, 3>, 3> m;  // m[row][col], 0-based

  IntersectionVector row(int k) const;  // k in {1,2,3}
  IntersectionVector col(int k) const;
  IntersectionMatrix transposed() const;

  std::string str() const;  // "[[-1,0,0],[0,-1,0],[0,0,1]]"

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;
};

enum class Form { i, ii, iii };

const char* form_name(Form f);  // "(i)", "(ii)", "(iii)"

// Which entry of the current intersection vector feeds the numerator and
// which the denominator during an h-walk. The unused index always equals
// the incoming edge label of the current vertex.
struct IndexPair {
  int num_idx;
  int den_idx;

  int unused() const { return 6 - num_idx - den_idx; }

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Gradients of the initial triangulation: (0/1, 1/0, -1/1).
GradientTriple initial_gradients();

// Replace entry k: by the mediant of the other two when entry k is not
// strictly between them, by their farey_difference when it is. Involutive.
GradientTriple flip_triple(const GradientTriple& t, int k);

// [num-1, den-1, num+den-1]; defined on gradients with num >= 0 (the region
// swept from t1 onward).
IntersectionVector grad_to_ivec(const Ratio& g);

// |cross_det(g, e)| - 1. Symmetric; -1 exactly when g == e.
mpz_class intersection_number(const Ratio& g, const Ratio& e);

// Matrix at the endpoint of a flip word from t1: entry (i, j) is the
// intersection number of the i-th moving arc with the j-th initial arc.
IntersectionMatrix matrix_of(const FlipWord& word);

// Forward matrix flip: row k <- row i + row j + [1,1,1]. Flipping the row
// that already equals that sum would move toward the root and is rejected.
IntersectionMatrix phi_flip(const IntersectionMatrix& m, int k);

// Transpose-conjugate of phi_flip: column k <- column i + column j + 1.
IntersectionMatrix psi_flip(const IntersectionMatrix& m, int k);

// Exactly one row is the +1-sum of the other two; that row's position names
// the form: row 3 -> (i), row 1 -> (ii), row 2 -> (iii). Every reachable
// matrix also satisfies col 3 = col 1 + col 2 + 1, which is checked too.
Form classify_form(const IntersectionMatrix& m);

// [d1,d2,d3] -> (d1+1)/(d2+1) on nonnegative vectors.
Ratio map_g(const IntersectionVector& v);

// The inductive assignment along a flip word: start with the pair (1,2) on
// [0,0,1]; an edge labeled k bumps whichever index equals k to the unused
// one, then reads the new vertex's vector.
Ratio h_walk(const FlipWord& word);

// Row k of matrix_of(word) where k is the last label (row 3 at the root).
IntersectionVector tree_D(const FlipWord& word);

// Third column of matrix_of(word).
IntersectionVector tree_Ddag(const FlipWord& word);

}  // namespace sbcw
