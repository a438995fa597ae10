#include "sbcw/classic_trees.hpp"

#include "sbcw/cluster.hpp"

namespace sbcw {

void GradientTriple::validate() const {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (g[i] == g[j])
        fail(errc::not_neighbors, "triple has repeated entry " + g[i].str());
      mpz_class det = cross_det(g[i], g[j]);
      if (det != 1 && det != -1)
        fail(errc::not_neighbors, "triple " + str() + " is not pairwise unimodular");
    }
}

std::string GradientTriple::str() const {
  return g[0].str() + "," + g[1].str() + "," + g[2].str();
}

Ratio cw_node(const TreeAddress& addr) {
  mpz_class x = 1, y = 1;
  for (Step s : addr) {
    if (s == Step::Left)
      y += x;  // x/y -> x/(x+y)
    else
      x += y;  // x/y -> (x+y)/y
  }
  return Ratio::reduce(std::move(x), std::move(y));
}

Ratio sb_node(const TreeAddress& addr) {
  Ratio lo = Ratio::reduce(0, 1);
  Ratio hi = Ratio::reduce(1, 0);
  Ratio value = mediant(lo, hi);
  for (Step s : addr) {
    if (s == Step::Left)
      hi = value;
    else
      lo = value;
    value = mediant(lo, hi);
  }
  return value;
}

GradientTriple farey_triple_node(const FlipWord& word) {
  validate_flipword(word);
  GradientTriple t = flip_triple(initial_gradients(), 3);  // (0/1, 1/0, 1/1)
  for (int k : word) t = flip_triple(t, k);
  return t;
}

namespace {

void require_positive_finite(const Ratio& q, const char* op) {
  if (q.is_infinite() || q.num() <= 0)
    fail(errc::out_of_domain, std::string(op) + " needs 0 < q < 1/0, got " + q.str());
}

}  // namespace

TreeAddress sb_locate(const Ratio& q) {
  require_positive_finite(q, "sb_locate");
  TreeAddress addr;
  Ratio lo = Ratio::reduce(0, 1);
  Ratio hi = Ratio::reduce(1, 0);
  Ratio value = mediant(lo, hi);
  while (value != q) {
    if (q < value) {
      addr.push_back(Step::Left);
      hi = value;
    } else {
      addr.push_back(Step::Right);
      lo = value;
    }
    value = mediant(lo, hi);
  }
  return addr;
}

TreeAddress cw_locate(const Ratio& q) {
  require_positive_finite(q, "cw_locate");
  TreeAddress reversed;
  mpz_class x = q.num(), y = q.den();
  while (x != y) {
    if (x > y) {
      reversed.push_back(Step::Right);  // came from (x-y)/y
      x -= y;
    } else {
      reversed.push_back(Step::Left);  // came from x/(y-x)
      y -= x;
    }
  }
  return TreeAddress(reversed.rbegin(), reversed.rend());
}

std::vector<Ratio> enumerate_level(ClassicKind kind, int depth) {
  std::vector<Ratio> out;
  out.reserve(std::size_t{1} << depth);
  TreeAddress addr(depth, Step::Right);
  // Count through addresses with R=0 < L=1 on each step: top of page first.
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
    for (int b = 0; b < depth; ++b)
      addr[b] = ((i >> (depth - 1 - b)) & 1) ? Step::Left : Step::Right;
    out.push_back(kind == ClassicKind::sb ? sb_node(addr) : cw_node(addr));
  }
  return out;
}

}  // namespace sbcw
