#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbcw/error.hpp"

namespace sbcw {

// All the binary trees here are drawn sideways with the larger branch on
// top; "top" is the Right child throughout.
enum class Step : std::uint8_t { Left, Right };

using TreeAddress = std::vector<Step>;

// Edge labels in {1,2,3} along a path from the root; consecutive labels
// differ and the first label is 1 or 2 (the root is entered via label 3).
using FlipWord = std::vector<int>;

// Labels on the edges to the left and right children of a vertex. The label
// missing from the pair is the incoming edge's label, so left != right.
struct LabelState {
  int left_label;
  int right_label;

  int third() const { return 6 - left_label - right_label; }

  friend bool operator==(const LabelState&, const LabelState&) = default;
};

// The root behaves as a right child entered via label 3: its right edge
// carries 1 and its left edge carries 2.
LabelState root_state();

// Taking a step emits that side's label; on the child, the stepped side's
// edge takes the third label and the other side keeps the sibling's label.
std::pair<int, LabelState> step_labels(LabelState state, Step step);

void validate_flipword(const FlipWord& word);

FlipWord address_to_flipword(const TreeAddress& addr);
TreeAddress flipword_to_address(const FlipWord& word);

std::string format_address(const TreeAddress& addr);  // "RL"; "" for the root
TreeAddress parse_address(std::string_view text);
std::string format_flipword(const FlipWord& word);  // "12"; "" for the root
FlipWord parse_flipword(std::string_view text);

}  // namespace sbcw
