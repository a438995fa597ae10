#include "sbcw/dump.hpp"

#include <utility>

#include "sbcw/classic_trees.hpp"
#include "sbcw/cluster.hpp"
#include "sbcw/words.hpp"

namespace sbcw {

std::optional<TreeKind> parse_tree_kind(std::string_view name) {
  if (name == "sb") return TreeKind::sb;
  if (name == "cw") return TreeKind::cw;
  if (name == "farey") return TreeKind::farey;
  if (name == "ivec") return TreeKind::ivec;
  if (name == "ivec-init") return TreeKind::ivec_init;
  if (name == "christoffel") return TreeKind::christoffel;
  if (name == "cohn") return TreeKind::cohn;
  if (name == "cohn-combined") return TreeKind::cohn_combined;
  return std::nullopt;
}

const char* tree_kind_name(TreeKind kind) {
  switch (kind) {
    case TreeKind::sb: return "sb";
    case TreeKind::cw: return "cw";
    case TreeKind::farey: return "farey";
    case TreeKind::ivec: return "ivec";
    case TreeKind::ivec_init: return "ivec-init";
    case TreeKind::christoffel: return "christoffel";
    case TreeKind::cohn: return "cohn";
    case TreeKind::cohn_combined: return "cohn-combined";
  }
  return "?";
}

int max_dump_depth(TreeKind kind) {
  switch (kind) {
    case TreeKind::christoffel:
    case TreeKind::cohn:
    case TreeKind::cohn_combined:
      return 12;  // word lengths grow Fibonacci-fast
    default:
      return 18;
  }
}

std::optional<DumpFormat> parse_dump_format(std::string_view name) {
  if (name == "text") return DumpFormat::text;
  if (name == "json") return DumpFormat::json;
  if (name == "dot") return DumpFormat::dot;
  return std::nullopt;
}

namespace {

// Enough state to grow any of the eight trees one step at a time; only the
// fields a kind uses are maintained for it.
struct WalkState {
  LabelState labels = root_state();
  Ratio cw;
  Ratio sb_lo, sb_hi, sb;
  GradientTriple triple;
  int last_label = 3;
  WordPair pair;
  WordTriple wtriple;
};

WalkState root_walk_state(TreeKind kind) {
  WalkState st;
  switch (kind) {
    case TreeKind::cw:
      st.cw = Ratio::reduce(1, 1);
      break;
    case TreeKind::sb:
      st.sb_lo = Ratio::reduce(0, 1);
      st.sb_hi = Ratio::reduce(1, 0);
      st.sb = mediant(st.sb_lo, st.sb_hi);
      break;
    case TreeKind::farey:
    case TreeKind::ivec:
    case TreeKind::ivec_init:
      st.triple = flip_triple(initial_gradients(), 3);
      break;
    case TreeKind::christoffel:
      st.pair = WordPair{"a", "b"};
      break;
    case TreeKind::cohn:
    case TreeKind::cohn_combined:
      st.wtriple = WordTriple{"a", "b", "ab"};
      break;
  }
  return st;
}

WalkState advance(TreeKind kind, const WalkState& st, Step step) {
  WalkState nx = st;
  auto [label, next] = step_labels(st.labels, step);
  nx.labels = next;
  nx.last_label = label;
  switch (kind) {
    case TreeKind::cw:
      nx.cw = step == Step::Left ? Ratio::reduce(st.cw.num(), st.cw.num() + st.cw.den())
                                 : Ratio::reduce(st.cw.num() + st.cw.den(), st.cw.den());
      break;
    case TreeKind::sb:
      if (step == Step::Left)
        nx.sb_hi = st.sb;
      else
        nx.sb_lo = st.sb;
      nx.sb = mediant(nx.sb_lo, nx.sb_hi);
      break;
    case TreeKind::farey:
    case TreeKind::ivec:
    case TreeKind::ivec_init:
      nx.triple = flip_triple(st.triple, label);
      break;
    case TreeKind::christoffel: {
      auto [left, right] = christoffel_children(st.pair);
      nx.pair = step == Step::Left ? left : right;
      break;
    }
    case TreeKind::cohn:
    case TreeKind::cohn_combined: {
      auto [left, right] = cohn_children(st.wtriple);
      nx.wtriple = step == Step::Left ? left : right;
      break;
    }
  }
  return nx;
}

nlohmann::json ivec_json(const IntersectionVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 1; i <= 3; ++i) {
    if (!v.at(i).fits_slong_p()) fail(errc::overflow, "vector entry exceeds 64 bits");
    j.push_back(v.at(i).get_si());
  }
  return j;
}

std::pair<std::string, nlohmann::json> emit(TreeKind kind, const WalkState& st) {
  switch (kind) {
    case TreeKind::cw:
      return {st.cw.str(), st.cw.str()};
    case TreeKind::sb:
      return {st.sb.str(), st.sb.str()};
    case TreeKind::farey: {
      nlohmann::json j{st.triple.at(1).str(), st.triple.at(2).str(), st.triple.at(3).str()};
      return {st.triple.str(), j};
    }
    case TreeKind::ivec: {
      IntersectionVector v;
      for (int j = 1; j <= 3; ++j)
        v.at(j) = intersection_number(st.triple.at(st.last_label), initial_gradients().at(j));
      return {v.str(), ivec_json(v)};
    }
    case TreeKind::ivec_init: {
      IntersectionVector v;
      for (int i = 1; i <= 3; ++i)
        v.at(i) = intersection_number(st.triple.at(i), initial_gradients().at(3));
      return {v.str(), ivec_json(v)};
    }
    case TreeKind::christoffel: {
      nlohmann::json j{st.pair.u, st.pair.v};
      return {st.pair.u + "," + st.pair.v, j};
    }
    case TreeKind::cohn: {
      nlohmann::json j{st.wtriple.u, st.wtriple.v, st.wtriple.w};
      return {st.wtriple.u + "," + st.wtriple.v + "," + st.wtriple.w, j};
    }
    case TreeKind::cohn_combined:
      return {st.wtriple.w, st.wtriple.w};
  }
  fail(errc::out_of_domain, "unknown tree kind");
}

// ivec-init follows its display convention: children ordered by edge label.
// Everything else puts the top-of-page (Right) child first.
std::pair<Step, Step> child_order(TreeKind kind, const LabelState& labels) {
  if (kind == TreeKind::ivec_init && labels.left_label < labels.right_label)
    return {Step::Left, Step::Right};
  return {Step::Right, Step::Left};
}

struct QueueItem {
  std::string path;
  std::string word;
  WalkState state;
};

}  // namespace

std::vector<DumpNode> enumerate_tree(TreeKind kind, int depth) {
  if (depth < 0) fail(errc::out_of_domain, "depth must be nonnegative");
  if (depth > max_dump_depth(kind))
    fail(errc::out_of_domain, "depth " + std::to_string(depth) + " exceeds the dump cap " +
                                  std::to_string(max_dump_depth(kind)) + " for " +
                                  tree_kind_name(kind));
  std::vector<DumpNode> out;
  out.reserve((std::size_t{2} << depth) - 1);
  std::vector<QueueItem> level{QueueItem{"", "", root_walk_state(kind)}};
  for (int d = 0;; ++d) {
    std::vector<QueueItem> next;
    if (d < depth) next.reserve(level.size() * 2);
    for (const QueueItem& item : level) {
      auto [text, json] = emit(kind, item.state);
      out.push_back(DumpNode{item.path, item.word, text, std::move(json)});
      if (d == depth) continue;
      auto [first, second] = child_order(kind, item.state.labels);
      for (Step s : {first, second}) {
        auto [label, unused] = step_labels(item.state.labels, s);
        (void)unused;
        next.push_back(QueueItem{item.path + (s == Step::Right ? 'R' : 'L'),
                                 item.word + static_cast<char>('0' + label),
                                 advance(kind, item.state, s)});
      }
    }
    if (d == depth) break;
    level = std::move(next);
  }
  return out;
}

namespace {

std::string render_text(const std::vector<DumpNode>& nodes) {
  std::string out;
  for (const DumpNode& n : nodes) {
    out += n.value_text;
    out += '\n';
  }
  return out;
}

std::string render_json(TreeKind kind, int depth, const std::vector<DumpNode>& nodes) {
  nlohmann::json j;
  j["kind"] = tree_kind_name(kind);
  j["depth"] = depth;
  nlohmann::json arr = nlohmann::json::array();
  for (const DumpNode& n : nodes)
    arr.push_back({{"path", n.path}, {"labels", n.labels}, {"value", n.value_json}});
  j["nodes"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string render_dot(TreeKind kind, const std::vector<DumpNode>& nodes) {
  std::string name = tree_kind_name(kind);
  for (char& c : name)
    if (c == '-') c = '_';
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
  for (const DumpNode& n : nodes) {
    std::string id = n.path.empty() ? "root" : n.path;
    out += "  \"" + id + "\" [label=\"" + n.value_text + "\"];\n";
    if (!n.path.empty()) {
      std::string parent = n.path.size() == 1 ? "root" : n.path.substr(0, n.path.size() - 1);
      out += "  \"" + parent + "\" -> \"" + id + "\" [label=\"" + n.labels.back() + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string render_tree(TreeKind kind, int depth, DumpFormat format) {
  std::vector<DumpNode> nodes = enumerate_tree(kind, depth);
  switch (format) {
    case DumpFormat::text: return render_text(nodes);
    case DumpFormat::json: return render_json(kind, depth, nodes);
    case DumpFormat::dot: return render_dot(kind, nodes);
  }
  fail(errc::out_of_domain, "unknown format");
}

}  // namespace sbcw
