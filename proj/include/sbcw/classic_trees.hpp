#pragma once

#include <array>
#include <string>
#include <vector>

#include "sbcw/rational.hpp"
#include "sbcw/treewalk.hpp"

namespace sbcw {

// Ordered triple of pairwise distinct, pairwise unimodular gradients. Holds
// for the root (0/1, 1/0, 1/1) and is preserved by flips.
struct GradientTriple {
  std::array<Ratio, 3> g;

  const Ratio& at(int k) const { return g[k - 1]; }  // k in {1,2,3}
  Ratio& at(int k) { return g[k - 1]; }

  // Throws if entries repeat or some pair has |cross_det| != 1.
  void validate() const;

  std::string str() const;  // "0/1,1/0,1/1"

  friend bool operator==(const GradientTriple&, const GradientTriple&) = default;
};

// Calkin-Wilf value at an address: root 1/1, Left x/y -> x/(x+y),
// Right x/y -> (x+y)/y.
Ratio cw_node(const TreeAddress& addr);

// Stern-Brocot value at an address: mediant of a narrowing (lo, hi) pair
// that starts at (0/1, 1/0).
Ratio sb_node(const TreeAddress& addr);

// Farey triple tree: root (0/1, 1/0, 1/1); edge label k replaces entry k by
// the flip of the triple in direction k (always a mediant on forward words).
GradientTriple farey_triple_node(const FlipWord& word);

// Inverse of sb_node by binary search. Requires 0 < q < infinity.
TreeAddress sb_locate(const Ratio& q);

// Inverse of cw_node by reverse Euclidean steps. Requires 0 < q < infinity.
TreeAddress cw_locate(const Ratio& q);

enum class ClassicKind { sb, cw };

// The 2^depth values of one level, top-of-page (all-Right address) first.
std::vector<Ratio> enumerate_level(ClassicKind kind, int depth);

}  // namespace sbcw
