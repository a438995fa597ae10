#include "sbcw/cluster.hpp"

namespace sbcw {

IntersectionVector IntersectionMatrix::row(int k) const {
  return IntersectionVector{{m[k - 1][0], m[k - 1][1], m[k - 1][2]}};
}

IntersectionVector IntersectionMatrix::col(int k) const {
  return IntersectionVector{{m[0][k - 1], m[1][k - 1], m[2][k - 1]}};
}

IntersectionMatrix IntersectionMatrix::transposed() const {
  IntersectionMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
  return t;
}

std::string IntersectionVector::str() const {
  return "[" + d[0].get_str() + "," + d[1].get_str() + "," + d[2].get_str() + "]";
}

std::string IntersectionMatrix::str() const {
  return "[" + row(1).str() + "," + row(2).str() + "," + row(3).str() + "]";
}

const char* form_name(Form f) {
  switch (f) {
    case Form::i: return "(i)";
    case Form::ii: return "(ii)";
    case Form::iii: return "(iii)";
  }
  return "?";
}

GradientTriple initial_gradients() {
  return GradientTriple{{Ratio::reduce(0, 1), Ratio::reduce(1, 0), Ratio::reduce(-1, 1)}};
}

GradientTriple flip_triple(const GradientTriple& t, int k) {
  if (k < 1 || k > 3) fail(errc::invalid_word, "flip direction " + std::to_string(k));
  int i = k == 1 ? 2 : 1;
  int j = k == 3 ? 2 : 3;
  const Ratio& a = t.at(i);
  const Ratio& b = t.at(j);
  const Ratio& cur = t.at(k);
  bool middle = (a < cur && cur < b) || (b < cur && cur < a);
  GradientTriple out = t;
  out.at(k) = middle ? farey_difference(a, b) : mediant(a, b);
  return out;
}

IntersectionVector grad_to_ivec(const Ratio& g) {
  if (g.num() < 0)
    fail(errc::out_of_region, "gradient " + g.str() + " has negative numerator");
  IntersectionVector v;
  v.d[0] = g.num() - 1;
  v.d[1] = g.den() - 1;
  v.d[2] = g.num() + g.den() - 1;
  return v;
}

mpz_class intersection_number(const Ratio& g, const Ratio& e) {
  mpz_class n = abs(cross_det(g, e)) - 1;
  return n;
}

namespace {

GradientTriple walk_gradients(const FlipWord& word) {
  GradientTriple t = flip_triple(initial_gradients(), 3);  // t1
  for (int k : word) t = flip_triple(t, k);
  return t;
}

IntersectionVector vec_against(const GradientTriple& moving, const Ratio& arc) {
  IntersectionVector v;
  for (int i = 1; i <= 3; ++i) v.at(i) = intersection_number(moving.at(i), arc);
  return v;
}

IntersectionVector sum_plus_one(const IntersectionVector& a, const IntersectionVector& b) {
  IntersectionVector s;
  for (int i = 0; i < 3; ++i) s.d[i] = a.d[i] + b.d[i] + 1;
  return s;
}

}  // namespace

IntersectionMatrix matrix_of(const FlipWord& word) {
  validate_flipword(word);
  GradientTriple e = initial_gradients();
  GradientTriple g = walk_gradients(word);
  IntersectionMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m.m[i][j] = intersection_number(g.at(i + 1), e.at(j + 1));
  return m;
}

IntersectionMatrix phi_flip(const IntersectionMatrix& m, int k) {
  if (k < 1 || k > 3) fail(errc::invalid_word, "flip direction " + std::to_string(k));
  int i = k == 1 ? 2 : 1;
  int j = k == 3 ? 2 : 3;
  IntersectionVector target = sum_plus_one(m.row(i), m.row(j));
  if (m.row(k) == target)
    fail(errc::middle_flip,
         "row " + std::to_string(k) + " of " + m.str() +
             " is the middle arc; re-walk the shorter word instead");
  IntersectionMatrix out = m;
  for (int c = 0; c < 3; ++c) out.m[k - 1][c] = target.d[c];
  return out;
}

IntersectionMatrix psi_flip(const IntersectionMatrix& m, int k) {
  return phi_flip(m.transposed(), k).transposed();
}

Form classify_form(const IntersectionMatrix& m) {
  // Structural relation shared by every reachable matrix: each row is an
  // intersection vector, so column 3 = column 1 + column 2 + 1.
  if (m.col(3) != sum_plus_one(m.col(1), m.col(2)))
    fail(errc::unclassifiable, "column relation fails for " + m.str());
  int middle = 0;
  int found = 0;
  for (int k = 1; k <= 3; ++k) {
    int i = k == 1 ? 2 : 1;
    int j = k == 3 ? 2 : 3;
    if (m.row(k) == sum_plus_one(m.row(i), m.row(j))) {
      middle = k;
      ++found;
    }
  }
  if (found != 1)
    fail(errc::unclassifiable,
         std::to_string(found) + " middle rows in " + m.str());
  switch (middle) {
    case 3: return Form::i;
    case 1: return Form::ii;
    default: return Form::iii;
  }
}

Ratio map_g(const IntersectionVector& v) {
  if (v.d[0] < 0 || v.d[1] < 0)
    fail(errc::out_of_domain, "map_g needs d1, d2 >= 0, got " + v.str());
  return Ratio::reduce(v.d[0] + 1, v.d[1] + 1);
}

Ratio h_walk(const FlipWord& word) {
  validate_flipword(word);
  GradientTriple e = initial_gradients();
  GradientTriple g = flip_triple(e, 3);
  IndexPair pair{1, 2};
  for (int k : word) {
    // k never equals pair.unused(): that is the incoming edge label.
    if (k == pair.num_idx)
      pair.num_idx = pair.unused();
    else
      pair.den_idx = pair.unused();
    g = flip_triple(g, k);
  }
  IntersectionVector v = vec_against(g, e.at(3));
  return Ratio::reduce(v.at(pair.num_idx) + 1, v.at(pair.den_idx) + 1);
}

IntersectionVector tree_D(const FlipWord& word) {
  int last = word.empty() ? 3 : word.back();
  return matrix_of(word).row(last);
}

IntersectionVector tree_Ddag(const FlipWord& word) {
  return matrix_of(word).col(3);
}

}  // namespace sbcw
