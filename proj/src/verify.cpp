#include "sbcw/verify.hpp"

#include <atomic>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sbcw/classic_trees.hpp"
#include "sbcw/cluster.hpp"
#include "sbcw/oracle.hpp"
#include "sbcw/words.hpp"

namespace sbcw {

std::string Report::line() const {
  std::string s = suite + ": " + (pass ? "PASS" : "FAIL") + " checked=" + std::to_string(checked);
  if (!pass) s += " counterexample: " + counterexample;
  return s;
}

namespace {

long long node_id(int depth, long long idx) { return ((1LL << depth) - 1) + idx; }

std::string where(const FlipWord& word) {
  return "addr=" + format_address(flipword_to_address(word)) +
         " word=" + format_flipword(word);
}

struct NodeCtx {
  const FlipWord& word;
  int incoming;  // edge label into this node; 3 at the root
  int depth;
};

// Depth-first over the subtree below one node, Right branch first, carrying
// a caller state forked per child.
template <class State, class Advance, class Check>
void dfs_subtree(const State& st, LabelState ls, int depth, long long idx, FlipWord& word,
                 int incoming, int max_depth, const Advance& adv, const Check& chk,
                 FailureCollector& fails, long long& checked) {
  if (auto msg = chk(st, NodeCtx{word, incoming, depth}))
    fails.record(node_id(depth, idx), *msg);
  ++checked;
  if (depth == max_depth) return;
  for (Step s : {Step::Right, Step::Left}) {
    auto [label, next] = step_labels(ls, s);
    word.push_back(label);
    dfs_subtree(adv(st, label, s), next, depth + 1, idx * 2 + (s == Step::Left ? 1 : 0), word,
                label, max_depth, adv, chk, fails, checked);
    word.pop_back();
  }
}

template <class State>
struct SweepTask {
  State state;
  LabelState labels;
  long long idx;
  FlipWord word;
};

// Checks nodes above the split depth serially and collects one task per
// split-depth node for the parallel phase.
template <class State, class Advance, class Check>
void gather_tasks(const State& st, LabelState ls, int depth, long long idx, FlipWord& word,
                  int split, const Advance& adv, const Check& chk,
                  std::vector<SweepTask<State>>& tasks, FailureCollector& fails,
                  long long& checked) {
  if (depth == split) {
    tasks.push_back(SweepTask<State>{st, ls, idx, word});
    return;
  }
  if (auto msg = chk(st, NodeCtx{word, word.empty() ? 3 : word.back(), depth}))
    fails.record(node_id(depth, idx), *msg);
  ++checked;
  for (Step s : {Step::Right, Step::Left}) {
    auto [label, next] = step_labels(ls, s);
    word.push_back(label);
    gather_tasks(adv(st, label, s), next, depth + 1, idx * 2 + (s == Step::Left ? 1 : 0), word,
                 split, adv, chk, tasks, fails, checked);
    word.pop_back();
  }
}

// One full-tree sweep: every node of every flip word of length <= max_depth,
// partitioned across threads by depth-`split` prefixes. The failure with the
// smallest level-order id wins, so reports match the serial ones.
template <class State, class Advance, class Check>
Report sweep_tree(const char* suite, int max_depth, ExecMode mode, State root,
                  const Advance& adv, const Check& chk) {
  Report rep;
  rep.suite = suite;
  FailureCollector fails;
  std::vector<SweepTask<State>> tasks;
  long long shallow = 0;
  int split = max_depth >= 7 ? 5 : 0;
  FlipWord word;
  try {
    gather_tasks(root, root_state(), 0, 0, word, split, adv, chk, tasks, fails, shallow);
  } catch (const std::exception& e) {
    fails.record(0, std::string("exception: ") + e.what());
  }
  std::atomic<long long> checked{shallow};
  for_each_index(static_cast<long long>(tasks.size()), mode, [&](long long ti) {
    const auto& task = tasks[ti];
    try {
      FlipWord w = task.word;
      long long local = 0;
      dfs_subtree(task.state, task.labels, split, task.idx, w, w.empty() ? 3 : w.back(),
                  max_depth, adv, chk, fails, local);
      checked += local;
    } catch (const std::exception& e) {
      fails.record(node_id(split, task.idx), std::string("exception: ") + e.what());
    }
  });
  rep.checked = checked.load();
  if (fails.failed()) {
    rep.pass = false;
    rep.counterexample = fails.message();
  }
  return rep;
}

GradientTriple t1_triple() { return flip_triple(initial_gradients(), 3); }

IntersectionVector vec_against(const GradientTriple& moving, const Ratio& arc) {
  IntersectionVector v;
  for (int i = 1; i <= 3; ++i) v.at(i) = intersection_number(moving.at(i), arc);
  return v;
}

void bump_pair(IndexPair& pair, int k) {
  if (k == pair.num_idx)
    pair.num_idx = pair.unused();
  else
    pair.den_idx = pair.unused();
}

// Reduced (num, den) lattice directions with |num| <= bound (nonneg only
// unless with_negatives), den in [0, bound]; deterministic order.
std::vector<std::pair<long long, long long>> reduced_directions(long long bound,
                                                                bool with_negatives) {
  std::vector<std::pair<long long, long long>> out;
  long long lo = with_negatives ? -bound : 0;
  for (long long num = lo; num <= bound; ++num)
    for (long long den = 0; den <= bound; ++den) {
      if (num == 0 && den == 0) continue;
      if (den == 0 && num != 1) continue;  // every n/0 reduces to 1/0
      if (std::gcd(num < 0 ? -num : num, den) != 1) continue;
      out.emplace_back(num, den);
    }
  return out;
}

}  // namespace

Report verify_main1(int depth, ExecMode mode) {
  struct State {
    GradientTriple g;
    int last;  // label of the arc created on entry
    Ratio lo, hi, sb;
  };
  State root{t1_triple(), 3, Ratio::reduce(0, 1), Ratio::reduce(1, 0), Ratio::reduce(1, 1)};
  auto adv = [](const State& st, int label, Step step) {
    State nx{flip_triple(st.g, label), label, st.lo, st.hi, st.sb};
    if (step == Step::Left)
      nx.hi = st.sb;
    else
      nx.lo = st.sb;
    nx.sb = mediant(nx.lo, nx.hi);
    return nx;
  };
  GradientTriple e = initial_gradients();
  auto chk = [&e](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    IntersectionVector d;
    for (int j = 1; j <= 3; ++j) d.at(j) = intersection_number(st.g.at(st.last), e.at(j));
    Ratio got = map_g(d);
    if (got == st.sb) return std::nullopt;
    return where(ctx.word) + " tree_D=" + d.str() + " g(tree_D)=" + got.str() +
           " sb=" + st.sb.str();
  };
  return sweep_tree("main1", depth, mode, root, adv, chk);
}

Report verify_main2(int depth, ExecMode mode) {
  struct State {
    GradientTriple g;
    IndexPair pair;
    mpz_class cw_num, cw_den;
  };
  State root{t1_triple(), IndexPair{1, 2}, 1, 1};
  auto adv = [](const State& st, int label, Step step) {
    State nx = st;
    bump_pair(nx.pair, label);
    nx.g = flip_triple(st.g, label);
    if (step == Step::Left)
      nx.cw_den += nx.cw_num;
    else
      nx.cw_num += nx.cw_den;
    return nx;
  };
  GradientTriple e = initial_gradients();
  auto chk = [&e](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    IntersectionVector v = vec_against(st.g, e.at(3));
    Ratio h = Ratio::reduce(v.at(st.pair.num_idx) + 1, v.at(st.pair.den_idx) + 1);
    Ratio cw = Ratio::reduce(st.cw_num, st.cw_den);
    if (h == cw) return std::nullopt;
    return where(ctx.word) + " tree_Ddag=" + v.str() + " h=" + h.str() + " cw=" + cw.str();
  };
  return sweep_tree("main2", depth, mode, root, adv, chk);
}

Report verify_duality(int samples, int max_len, ExecMode mode) {
  Report rep;
  rep.suite = "duality";
  std::mt19937 rng(20240601u);
  std::vector<FlipWord> words(samples);
  for (auto& w : words) {
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    int prev = 3;
    w.reserve(len);
    for (int i = 0; i < len; ++i) {
      int options[2];
      int n = 0;
      for (int k = 1; k <= 3; ++k)
        if (k != prev) options[n++] = k;
      prev = options[rng() % 2u];
      w.push_back(prev);
    }
  }
  FailureCollector fails;
  std::atomic<long long> checked{0};
  for_each_index(samples, mode, [&](long long i) {
    try {
      const FlipWord& w = words[i];
      IntersectionMatrix by_gradients = matrix_of(w);
      IntersectionMatrix by_rows = matrix_of(FlipWord{});
      IntersectionMatrix by_cols = matrix_of(FlipWord{});
      for (int k : w) {
        by_rows = phi_flip(by_rows, k);
        by_cols = psi_flip(by_cols, k);
      }
      std::string msg;
      if (by_rows != by_gradients)
        msg = "phi walk " + by_rows.str() + " != matrix " + by_gradients.str();
      else if (by_cols != by_gradients.transposed())
        msg = "psi walk " + by_cols.str() + " != transpose of " + by_gradients.str();
      else {
        GradientTriple e = initial_gradients();
        GradientTriple g = t1_triple();
        for (int k : w) g = flip_triple(g, k);
        for (int r = 1; r <= 3 && msg.empty(); ++r)
          for (int c = 1; c <= 3 && msg.empty(); ++c) {
            mpz_class swapped = intersection_number(e.at(r), g.at(c));
            if (swapped != by_gradients.m[c - 1][r - 1])
              msg = "role swap (" + std::to_string(r) + "," + std::to_string(c) + ")";
          }
      }
      if (!msg.empty()) fails.record(i, "sample#" + std::to_string(i) + " " + where(w) + " " + msg);
      ++checked;
    } catch (const std::exception& e) {
      fails.record(i, std::string("exception: ") + e.what());
    }
  });
  rep.checked = checked.load();
  if (fails.failed()) {
    rep.pass = false;
    rep.counterexample = fails.message();
  }
  return rep;
}

Report verify_maximality(int depth, ExecMode mode) {
  struct State {
    GradientTriple g;
    IndexPair pair;
    IntersectionVector v;
    std::optional<IntersectionVector> parent_v;
  };
  GradientTriple e = initial_gradients();
  State root{t1_triple(), IndexPair{1, 2}, IntersectionVector{}, std::nullopt};
  root.v = vec_against(root.g, e.at(3));
  auto adv = [&e](const State& st, int label, Step) {
    State nx;
    nx.g = flip_triple(st.g, label);
    nx.pair = st.pair;
    bump_pair(nx.pair, label);
    nx.v = vec_against(nx.g, e.at(3));
    nx.parent_v = st.v;
    return nx;
  };
  auto chk = [](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    if (st.pair.unused() != ctx.incoming)
      return where(ctx.word) + " unused index " + std::to_string(st.pair.unused()) +
             " != incoming label " + std::to_string(ctx.incoming);
    for (int i = 1; i <= 3; ++i)
      if (st.v.at(i) < 0) return where(ctx.word) + " negative entry in " + st.v.str();
    if (!st.parent_v) return std::nullopt;
    int k = ctx.incoming;
    const IntersectionVector& pv = *st.parent_v;
    mpz_class parent_max = pv.at(1);
    for (int i = 2; i <= 3; ++i)
      if (pv.at(i) > parent_max) parent_max = pv.at(i);
    if (pv.at(k) >= parent_max)
      return where(ctx.word) + " entry " + std::to_string(k) + " already maximal in parent " +
             pv.str();
    for (int i = 1; i <= 3; ++i) {
      if (i == k) continue;
      if (pv.at(i) != st.v.at(i))
        return where(ctx.word) + " entry " + std::to_string(i) + " changed across edge " +
               std::to_string(k) + ": " + pv.str() + " -> " + st.v.str();
      if (st.v.at(k) <= st.v.at(i))
        return where(ctx.word) + " entry " + std::to_string(k) + " not strictly maximal in " +
               st.v.str();
    }
    return std::nullopt;
  };
  return sweep_tree("maximality", depth, mode, root, adv, chk);
}

Report verify_forms(int depth, ExecMode mode) {
  struct State {
    IntersectionMatrix m;
    Form form;
    std::optional<Form> parent_form;
  };
  IntersectionMatrix root_m = matrix_of(FlipWord{});
  State root{root_m, classify_form(root_m), std::nullopt};
  auto adv = [](const State& st, int label, Step) {
    State nx;
    nx.m = phi_flip(st.m, label);
    nx.form = classify_form(nx.m);
    nx.parent_form = st.form;
    return nx;
  };
  auto arrow = [](Form from, int k) -> std::optional<Form> {
    switch (from) {
      case Form::i:
        if (k == 1) return Form::ii;
        if (k == 2) return Form::iii;
        return std::nullopt;
      case Form::ii:
        if (k == 2) return Form::iii;
        if (k == 3) return Form::i;
        return std::nullopt;
      case Form::iii:
        if (k == 1) return Form::ii;
        if (k == 3) return Form::i;
        return std::nullopt;
    }
    return std::nullopt;
  };
  auto chk = [&arrow](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    if (!st.parent_form) {
      if (st.form != Form::i)
        return std::string("root classifies as ") + form_name(st.form) + ", expected (i)";
      return std::nullopt;
    }
    std::optional<Form> expect = arrow(*st.parent_form, ctx.incoming);
    if (!expect)
      return where(ctx.word) + " no diagram arrow " + form_name(*st.parent_form) + " --" +
             std::to_string(ctx.incoming) + "--> taken";
    if (st.form != *expect)
      return where(ctx.word) + " " + form_name(*st.parent_form) + " --" +
             std::to_string(ctx.incoming) + "--> gave " + form_name(st.form) + ", expected " +
             form_name(*expect);
    return std::nullopt;
  };
  return sweep_tree("forms", depth, mode, root, adv, chk);
}

Report verify_int_inc(long long bound, ExecMode mode) {
  Report rep;
  rep.suite = "int-inc";
  std::vector<std::pair<long long, long long>> grid;  // (p, q), p + q <= bound
  for (long long n = 1; n <= bound; ++n)
    for (long long p = 0; p <= n; ++p) {
      long long q = n - p;
      if (std::gcd(p, q) != 1) continue;
      grid.emplace_back(p, q);
    }
  const Ratio families[3] = {Ratio::reduce(0, 1), Ratio::reduce(1, 0), Ratio::reduce(-1, 1)};
  FailureCollector fails;
  std::atomic<long long> checked{0};
  for_each_index(static_cast<long long>(grid.size()), mode, [&](long long i) {
    try {
      auto [p, q] = grid[i];
      Segment arc = Segment::to_point(q, p);
      IntersectionVector expect = grad_to_ivec(Ratio::reduce(p, q));
      for (int j = 1; j <= 3; ++j) {
        long long got = crossing_count(arc, families[j - 1]);
        if (expect.at(j) != got) {
          fails.record(i, "gradient " + std::to_string(p) + "/" + std::to_string(q) +
                              " vs family " + families[j - 1].str() + ": counted " +
                              std::to_string(got) + ", lemma says " + expect.at(j).get_str());
          return;
        }
      }
      ++checked;
    } catch (const std::exception& e) {
      fails.record(i, std::string("exception: ") + e.what());
    }
  });
  rep.checked = checked.load();
  if (fails.failed()) {
    rep.pass = false;
    rep.counterexample = fails.message();
  }
  return rep;
}

Report verify_det_law(long long bound, ExecMode mode) {
  Report rep;
  rep.suite = "det";
  auto arcs = reduced_directions(bound, true);
  auto families = reduced_directions(bound, true);
  long long total = static_cast<long long>(arcs.size() * families.size());
  FailureCollector fails;
  std::atomic<long long> checked{0};
  for_each_index(total, mode, [&](long long i) {
    try {
      auto [p, q] = arcs[i / families.size()];
      auto [r, s] = families[i % families.size()];
      Segment arc = Segment::to_point(q, p);
      Ratio family = Ratio::reduce(r, s);
      long long got = crossing_count(arc, family);
      long long det = p * s - r * q;
      long long expect = (det < 0 ? -det : det) - 1;
      if (got != expect) {
        fails.record(i, "arc " + std::to_string(p) + "/" + std::to_string(q) + " family " +
                            family.str() + ": counted " + std::to_string(got) +
                            ", |det|-1 = " + std::to_string(expect));
        return;
      }
      ++checked;
    } catch (const std::exception& e) {
      fails.record(i, std::string("exception: ") + e.what());
    }
  });
  rep.checked = checked.load();
  if (fails.failed()) {
    rep.pass = false;
    rep.counterexample = fails.message();
  }
  return rep;
}

namespace {

struct ProjectionState {
  mpz_class cw_num, cw_den;
  Ratio sb_lo, sb_hi, sb;
};

ProjectionState projection_root() {
  return ProjectionState{1, 1, Ratio::reduce(0, 1), Ratio::reduce(1, 0), Ratio::reduce(1, 1)};
}

ProjectionState projection_step(const ProjectionState& st, Step step) {
  ProjectionState nx = st;
  if (step == Step::Left) {
    nx.cw_den += nx.cw_num;
    nx.sb_hi = st.sb;
  } else {
    nx.cw_num += nx.cw_den;
    nx.sb_lo = st.sb;
  }
  nx.sb = mediant(nx.sb_lo, nx.sb_hi);
  return nx;
}

}  // namespace

Report verify_christoffel(int depth, ExecMode mode) {
  struct State {
    WordPair p;
    ProjectionState proj;
  };
  State root{WordPair{"a", "b"}, projection_root()};
  auto adv = [](const State& st, int, Step step) {
    auto [left, right] = christoffel_children(st.p);
    return State{step == Step::Left ? left : right, projection_step(st.proj, step)};
  };
  auto chk = [](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    BWord uv = st.p.u + st.p.v;
    for (const BWord* w : {&st.p.u, &st.p.v, &uv})
      if (!is_christoffel(*w))
        return where(ctx.word) + " \"" + *w + "\" is not a Christoffel word";
    if (det_pair(st.p.u, st.p.v) != 1)
      return where(ctx.word) + " det != 1 for (" + st.p.u + "," + st.p.v + ")";
    WordCounts cu = counts(st.p.u), cv = counts(st.p.v), cuv = counts(uv);
    Ratio len_ratio = Ratio::reduce(cu.n, cv.n);
    Ratio cw = Ratio::reduce(st.proj.cw_num, st.proj.cw_den);
    if (len_ratio != cw)
      return where(ctx.word) + " |u|/|v| = " + len_ratio.str() + " != cw " + cw.str();
    Ratio slope = Ratio::reduce(cuv.nb, cuv.na);
    if (slope != st.proj.sb)
      return where(ctx.word) + " #b/#a of uv = " + slope.str() + " != sb " + st.proj.sb.str();
    return std::nullopt;
  };
  return sweep_tree("christoffel", depth, mode, root, adv, chk);
}

Report verify_cohn(int depth, ExecMode mode) {
  struct State {
    WordTriple t;
    ProjectionState proj;
  };
  State root{WordTriple{"a", "b", "ab"}, projection_root()};
  auto adv = [](const State& st, int, Step step) {
    auto [left, right] = cohn_children(st.t);
    return State{step == Step::Left ? left : right, projection_step(st.proj, step)};
  };
  auto chk = [](const State& st, const NodeCtx& ctx) -> std::optional<std::string> {
    if (st.t.w != st.t.u + st.t.v)
      return where(ctx.word) + " third entry is not u.v";
    for (const BWord* w : {&st.t.u, &st.t.v, &st.t.w})
      if (!is_christoffel(*w))
        return where(ctx.word) + " \"" + *w + "\" is not a Christoffel word";
    if (det_pair(st.t.u, st.t.v) != 1)
      return where(ctx.word) + " det != 1 for (" + st.t.u + "," + st.t.v + ")";
    WordCounts cu = counts(st.t.u), cv = counts(st.t.v), cw_counts = counts(st.t.w);
    Ratio len_ratio = Ratio::reduce(cu.n, cv.n);
    if (len_ratio != st.proj.sb)
      return where(ctx.word) + " |u|/|v| = " + len_ratio.str() + " != sb " + st.proj.sb.str();
    Ratio slope = Ratio::reduce(cw_counts.nb, cw_counts.na);
    Ratio cw = Ratio::reduce(st.proj.cw_num, st.proj.cw_den);
    if (slope != cw)
      return where(ctx.word) + " #b/#a of uv = " + slope.str() + " != cw " + cw.str();
    return std::nullopt;
  };
  return sweep_tree("cohn", depth, mode, root, adv, chk);
}

Report verify_closure(long long max_len, ExecMode mode) {
  Report rep;
  rep.suite = "closure";
  std::vector<Ratio> slopes;  // all reduced y/x with x + y <= max_len
  for (long long n = 1; n <= max_len; ++n)
    for (long long y = 0; y <= n; ++y) {
      long long x = n - y;
      if (std::gcd(x, y) != 1) continue;
      slopes.push_back(Ratio::reduce(y, x));
    }
  FailureCollector fails;
  std::atomic<long long> checked{0};
  for_each_index(static_cast<long long>(slopes.size()), mode, [&](long long i) {
    try {
      BWord w = christoffel_word(slopes[i]);
      if (!is_christoffel(subst_a_to_ab(w)))
        fails.record(i, "a->ab breaks \"" + w + "\"");
      else if (!is_christoffel(subst_b_to_ab(w)))
        fails.record(i, "b->ab breaks \"" + w + "\"");
      else
        ++checked;
    } catch (const std::exception& e) {
      fails.record(i, std::string("exception: ") + e.what());
    }
  });
  // Breadth-first closure of {ab} under both substitutions, bounded by
  // length; both substitutions strictly grow words containing both letters.
  std::set<BWord> reached;
  std::vector<BWord> frontier{"ab"};
  reached.insert("ab");
  while (!frontier.empty()) {
    std::vector<BWord> next;
    for (const BWord& w : frontier)
      for (BWord child : {subst_a_to_ab(w), subst_b_to_ab(w)})
        if (static_cast<long long>(child.size()) <= max_len && reached.insert(child).second)
          next.push_back(std::move(child));
    frontier = std::move(next);
  }
  long long missing_id = -1;
  std::string missing;
  long long reach_checked = 0;
  for (const Ratio& slope : slopes) {
    if (slope.num() == 0 || slope.den() == 0) continue;  // degenerate slopes stay unreachable
    BWord w = christoffel_word(slope);
    ++reach_checked;
    if (!reached.count(w) && missing_id < 0) {
      missing_id = reach_checked;
      missing = "\"" + w + "\" (slope " + slope.str() + ") not reached from ab";
    }
  }
  if (missing_id >= 0) fails.record(static_cast<long long>(slopes.size()) + missing_id, missing);
  rep.checked = checked.load() + reach_checked;
  if (fails.failed()) {
    rep.pass = false;
    rep.counterexample = fails.message();
  }
  return rep;
}

}  // namespace sbcw
