#include "sbcw/words.hpp"

#include <algorithm>
#include <numeric>

namespace sbcw {

namespace {

constexpr long long kWordCap = 2'000'000;

long long narrow_slope(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) fail(errc::overflow, std::string(what) + " exceeds 64 bits");
  return z.get_si();
}

std::pair<long long, long long> slope_xy(const Ratio& slope) {
  long long y = narrow_slope(slope.num(), "slope numerator");
  long long x = narrow_slope(slope.den(), "slope denominator");
  if (y < 0) fail(errc::out_of_domain, "slope " + slope.str() + " is negative");
  if (x + y > kWordCap)
    fail(errc::overflow, "refusing to build a word of length " + std::to_string(x + y));
  return {x, y};
}

}  // namespace

BWord christoffel_word(const Ratio& slope) {
  auto [x, y] = slope_xy(slope);
  if (y == 0) return "a";
  if (x == 0) return "b";
  long long n = x + y;
  BWord w;
  w.reserve(n);
  // Letter k is 'a' exactly when k*y mod n climbs past (k-1)*y mod n.
  long long prev = 0;
  for (long long k = 1; k <= n; ++k) {
    long long cur = (prev + y) % n;
    w.push_back(cur > prev ? 'a' : 'b');
    prev = cur;
  }
  return w;
}

BWord path_oracle(const Ratio& slope) {
  auto [x, y] = slope_xy(slope);
  BWord w;
  w.reserve(x + y);
  long long i = 0, j = 0;
  while (i < x || j < y) {
    // Climb whenever the next unit stays weakly below the line, else move
    // right; this staircase hugs the segment from below with no lattice
    // point between them.
    if (x * (j + 1) <= y * i) {
      w.push_back('b');
      ++j;
    } else {
      w.push_back('a');
      ++i;
    }
  }
  return w;
}

WordCounts counts(const BWord& w) {
  WordCounts c{0, 0, 0};
  for (char ch : w)
    if (ch == 'a')
      ++c.na;
    else
      ++c.nb;
  c.n = c.na + c.nb;
  return c;
}

bool is_christoffel(const BWord& w) {
  if (w.empty()) return false;
  WordCounts c = counts(w);
  if (std::gcd(c.na, c.nb) != 1) return false;
  return w == christoffel_word(Ratio::reduce(c.nb, c.na));
}

BWord star(const BWord& u, const BWord& v) {
  if (u == v) fail(errc::equal_words, "star of \"" + u + "\" with itself");
  return u < v ? u + v : v + u;
}

std::pair<WordPair, WordPair> christoffel_children(const WordPair& p) {
  BWord uv = p.u + p.v;
  return {WordPair{p.u, uv}, WordPair{uv, p.v}};
}

std::pair<LabeledTriple, LabeledTriple> christoffel_triple_children(const WordTriple& t) {
  if (t.u == t.v || t.u == t.w || t.v == t.w)
    fail(errc::tie_break, "triple " + t.u + "," + t.v + "," + t.w + " has equal entries");
  const BWord* sorted[3] = {&t.u, &t.v, &t.w};
  std::sort(sorted, sorted + 3, [](const BWord* a, const BWord* b) { return *a < *b; });
  const BWord* second = sorted[1];
  LabeledTriple via1{1, WordTriple{star(t.v, t.w), t.v, t.w}};
  LabeledTriple via2{2, WordTriple{t.u, star(t.u, t.w), t.w}};
  LabeledTriple via3{3, WordTriple{t.u, t.v, star(t.u, t.v)}};
  if (second == &t.u) return {via2, via3};
  if (second == &t.v) return {via1, via3};
  return {via1, via2};
}

BWord subst_a_to_ab(const BWord& w) {
  BWord out;
  out.reserve(w.size() + counts(w).na);
  for (char c : w) {
    out.push_back(c);
    if (c == 'a') out.push_back('b');
  }
  return out;
}

BWord subst_b_to_ab(const BWord& w) {
  BWord out;
  out.reserve(w.size() + counts(w).nb);
  for (char c : w) {
    if (c == 'b') out.push_back('a');
    out.push_back(c);
  }
  return out;
}

std::pair<WordTriple, WordTriple> cohn_children(const WordTriple& t) {
  WordTriple left{subst_b_to_ab(t.u), subst_b_to_ab(t.v), subst_b_to_ab(t.w)};
  WordTriple right{subst_a_to_ab(t.u), subst_a_to_ab(t.v), subst_a_to_ab(t.w)};
  return {left, right};
}

long long det_pair(const BWord& u, const BWord& v) {
  WordCounts cu = counts(u);
  WordCounts cv = counts(v);
  return cu.na * cv.nb - cv.na * cu.nb;
}

WordPair christoffel_pair_node(const TreeAddress& addr) {
  WordPair p{"a", "b"};
  for (Step s : addr) {
    auto [left, right] = christoffel_children(p);
    p = (s == Step::Left) ? left : right;
  }
  return p;
}

WordTriple christoffel_triple_node(const TreeAddress& addr) {
  WordTriple t{"a", "b", "ab"};
  LabelState state = root_state();
  for (Step s : addr) {
    auto [label, next] = step_labels(state, s);
    auto [c1, c2] = christoffel_triple_children(t);
    if (c1.label == label)
      t = c1.triple;
    else if (c2.label == label)
      t = c2.triple;
    else
      fail(errc::invalid_word,
           "triple children labels " + std::to_string(c1.label) + "," +
               std::to_string(c2.label) + " do not offer " + std::to_string(label));
    state = next;
  }
  return t;
}

WordTriple cohn_triple_node(const TreeAddress& addr) {
  WordTriple t{"a", "b", "ab"};
  for (Step s : addr) {
    auto [left, right] = cohn_children(t);
    t = (s == Step::Left) ? left : right;
  }
  return t;
}

BWord combined_cohn_node(const TreeAddress& addr) {
  return cohn_triple_node(addr).w;
}

}  // namespace sbcw
