#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sbcw {

enum class TreeKind {
  sb,
  cw,
  farey,
  ivec,
  ivec_init,
  christoffel,
  cohn,
  cohn_combined,
};

std::optional<TreeKind> parse_tree_kind(std::string_view name);
const char* tree_kind_name(TreeKind kind);

// Largest dump depth per kind; word trees grow Fibonacci-fast.
int max_dump_depth(TreeKind kind);

struct DumpNode {
  std::string path;    // "RL"; "" at the root
  std::string labels;  // "12"; "" at the root
  std::string value_text;
  nlohmann::json value_json;
};

// All nodes to the given depth in level order. Within a level, children
// follow their parent's order; parents emit the top-of-page (Right) child
// first, except ivec-init, whose display convention orders children by edge
// label.
std::vector<DumpNode> enumerate_tree(TreeKind kind, int depth);

enum class DumpFormat { text, json, dot };

std::optional<DumpFormat> parse_dump_format(std::string_view name);

std::string render_tree(TreeKind kind, int depth, DumpFormat format);

}  // namespace sbcw
