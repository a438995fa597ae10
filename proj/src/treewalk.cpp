#include "sbcw/treewalk.hpp"

namespace sbcw {

LabelState root_state() { return LabelState{2, 1}; }

std::pair<int, LabelState> step_labels(LabelState state, Step step) {
  int t = state.third();
  if (step == Step::Left) return {state.left_label, LabelState{t, state.right_label}};
  return {state.right_label, LabelState{state.left_label, t}};
}

void validate_flipword(const FlipWord& word) {
  int prev = 3;  // the root's virtual incoming edge
  bool first = true;
  for (int k : word) {
    if (k < 1 || k > 3)
      fail(errc::invalid_word, "label " + std::to_string(k) + " not in {1,2,3}");
    if (k == prev)
      fail(errc::invalid_word,
           first ? std::string("first label must be 1 or 2")
                 : "label " + std::to_string(k) + " repeats consecutively");
    prev = k;
    first = false;
  }
}

FlipWord address_to_flipword(const TreeAddress& addr) {
  FlipWord word;
  word.reserve(addr.size());
  LabelState state = root_state();
  for (Step s : addr) {
    auto [label, next] = step_labels(state, s);
    word.push_back(label);
    state = next;
  }
  return word;
}

TreeAddress flipword_to_address(const FlipWord& word) {
  validate_flipword(word);
  TreeAddress addr;
  addr.reserve(word.size());
  LabelState state = root_state();
  for (int k : word) {
    // After validation k is always one of the two child labels: the label
    // missing from the state is the one just consumed.
    Step s = (k == state.left_label) ? Step::Left : Step::Right;
    addr.push_back(s);
    state = step_labels(state, s).second;
  }
  return addr;
}

std::string format_address(const TreeAddress& addr) {
  std::string out;
  out.reserve(addr.size());
  for (Step s : addr) out.push_back(s == Step::Right ? 'R' : 'L');
  return out;
}

TreeAddress parse_address(std::string_view text) {
  TreeAddress addr;
  addr.reserve(text.size());
  for (char c : text) {
    if (c == 'R')
      addr.push_back(Step::Right);
    else if (c == 'L')
      addr.push_back(Step::Left);
    else
      fail(errc::parse_error, std::string("address character '") + c + "' not in {L,R}");
  }
  return addr;
}

std::string format_flipword(const FlipWord& word) {
  std::string out;
  out.reserve(word.size());
  for (int k : word) out.push_back(static_cast<char>('0' + k));
  return out;
}

FlipWord parse_flipword(std::string_view text) {
  FlipWord word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '3')
      fail(errc::parse_error, std::string("flip label '") + c + "' not in {1,2,3}");
    word.push_back(c - '0');
  }
  validate_flipword(word);
  return word;
}

}  // namespace sbcw
