#pragma once

#include <string>
#include <utility>

#include "sbcw/rational.hpp"
#include "sbcw/treewalk.hpp"

namespace sbcw {

// Words over the alphabet {a, b}. Lexicographic order is the usual one with
// a < b and a proper prefix preceding its extensions, i.e. std::string's.
using BWord = std::string;

struct WordCounts {
  long long na;
  long long nb;
  long long n;
};

struct WordPair {
  BWord u;
  BWord v;

  friend bool operator==(const WordPair&, const WordPair&) = default;
};

struct WordTriple {
  BWord u;
  BWord v;
  BWord w;

  friend bool operator==(const WordTriple&, const WordTriple&) = default;
};

struct LabeledTriple {
  int label;  // in {1,2,3}
  WordTriple triple;
};

// Word of the lower Christoffel path of slope y/x: x letters a and y
// letters b; slopes 0/1 and 1/0 give the one-letter words "a" and "b".
BWord christoffel_word(const Ratio& slope);

// Independent geometric construction: walk the staircase from (0,0) to
// (x,y) that hugs the segment from below, stepping up whenever that stays
// weakly below the line. Must agree with christoffel_word everywhere.
BWord path_oracle(const Ratio& slope);

WordCounts counts(const BWord& w);

// True iff w is exactly the Christoffel word of slope #b/#a.
bool is_christoffel(const BWord& w);

// u*v = uv if u precedes v lexicographically, vu otherwise; u == v is an
// error.
BWord star(const BWord& u, const BWord& v);

// Children of (u,v): left (u, uv), right (uv, v).
std::pair<WordPair, WordPair> christoffel_children(const WordPair& p);

// Children of a Christoffel triple by the case of its lexicographically
// second-largest entry; returned with their edge labels, smaller label
// first. Any two equal entries are an error.
std::pair<LabeledTriple, LabeledTriple> christoffel_triple_children(const WordTriple& t);

// Left child substitutes b -> ab in all three words, right child a -> ab.
// Both preserve w = u.v.
std::pair<WordTriple, WordTriple> cohn_children(const WordTriple& t);

// |u|_a * |v|_b - |v|_a * |u|_b.
long long det_pair(const BWord& u, const BWord& v);

BWord subst_a_to_ab(const BWord& w);
BWord subst_b_to_ab(const BWord& w);

WordPair christoffel_pair_node(const TreeAddress& addr);
WordTriple christoffel_triple_node(const TreeAddress& addr);
WordTriple cohn_triple_node(const TreeAddress& addr);
BWord combined_cohn_node(const TreeAddress& addr);

}  // namespace sbcw
