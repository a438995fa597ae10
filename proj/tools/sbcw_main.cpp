// Command-line front end: tree dumps, tree locators, Christoffel words,
// best rational approximation, and the verification suites.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sbcw/approx.hpp"
#include "sbcw/classic_trees.hpp"
#include "sbcw/dump.hpp"
#include "sbcw/treewalk.hpp"
#include "sbcw/verify.hpp"
#include "sbcw/words.hpp"

namespace {

constexpr int kMaxVerifyDepth = 24;

int run_tree(const std::string& kind_name, int depth, const std::string& format_name) {
  auto kind = sbcw::parse_tree_kind(kind_name);
  if (!kind) {
    std::cerr << "unknown tree kind \"" << kind_name << "\"\n";
    return 2;
  }
  auto format = sbcw::parse_dump_format(format_name);
  if (!format) {
    std::cerr << "unknown format \"" << format_name << "\"\n";
    return 2;
  }
  std::cout << sbcw::render_tree(*kind, depth, *format);
  return 0;
}

int run_locate(const std::string& tree, const std::string& fraction) {
  sbcw::Ratio q = sbcw::Ratio::parse(fraction);
  sbcw::TreeAddress addr;
  if (tree == "sb")
    addr = sbcw::sb_locate(q);
  else if (tree == "cw")
    addr = sbcw::cw_locate(q);
  else {
    std::cerr << "locate expects tree \"sb\" or \"cw\", got \"" << tree << "\"\n";
    return 2;
  }
  std::cout << "path: " << sbcw::format_address(addr) << "\n"
            << "labels: " << sbcw::format_flipword(sbcw::address_to_flipword(addr)) << "\n";
  return 0;
}

int run_verify(const std::string& suite, int depth, long long bound, int samples, int max_len,
               bool serial) {
  sbcw::ExecMode mode = serial ? sbcw::ExecMode::serial : sbcw::ExecMode::parallel;
  if (depth > kMaxVerifyDepth) {
    std::cerr << "depth " << depth << " exceeds the verify cap " << kMaxVerifyDepth << "\n";
    return 2;
  }
  sbcw::Report report;
  if (suite == "main1")
    report = sbcw::verify_main1(depth < 0 ? 12 : depth, mode);
  else if (suite == "main2")
    report = sbcw::verify_main2(depth < 0 ? 12 : depth, mode);
  else if (suite == "duality")
    report = sbcw::verify_duality(samples, max_len, mode);
  else if (suite == "maximality")
    report = sbcw::verify_maximality(depth < 0 ? 12 : depth, mode);
  else if (suite == "forms")
    report = sbcw::verify_forms(depth < 0 ? 12 : depth, mode);
  else if (suite == "int-inc")
    report = sbcw::verify_int_inc(bound < 0 ? 50 : bound, mode);
  else if (suite == "det")
    report = sbcw::verify_det_law(bound < 0 ? 20 : bound, mode);
  else if (suite == "christoffel")
    report = sbcw::verify_christoffel(depth < 0 ? 10 : depth, mode);
  else if (suite == "cohn")
    report = sbcw::verify_cohn(depth < 0 ? 10 : depth, mode);
  else if (suite == "closure")
    report = sbcw::verify_closure(bound < 0 ? 40 : bound, mode);
  else {
    std::cerr << "unknown suite \"" << suite << "\"\n";
    return 2;
  }
  std::cout << report.line() << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stern-Brocot / Calkin-Wilf duality toolkit"};
  app.require_subcommand(1);

  auto* tree = app.add_subcommand("tree", "enumerate a tree to a depth");
  std::string tree_kind;
  int tree_depth = 3;
  std::string tree_format = "text";
  tree->add_option("kind", tree_kind,
                   "sb|cw|farey|ivec|ivec-init|christoffel|cohn|cohn-combined")
      ->required();
  tree->add_option("--depth", tree_depth, "levels below the root (default 3)");
  tree->add_option("--format", tree_format, "text|json|dot (default text)");

  auto* locate = app.add_subcommand("locate", "find a fraction's address");
  std::string locate_tree, locate_fraction;
  locate->add_option("tree", locate_tree, "sb|cw")->required();
  locate->add_option("fraction", locate_fraction, "positive fraction \"p/q\"")->required();

  auto* word = app.add_subcommand("word", "Christoffel word of a slope");
  std::string word_slope;
  word->add_option("--slope", word_slope, "nonnegative slope \"y/x\"")->required();

  auto* approx = app.add_subcommand("approx", "best bounded-denominator approximation");
  std::string approx_value;
  long long approx_max_den = 0;
  approx->add_option("value", approx_value, "exact decimal, e.g. 3.14159")->required();
  approx->add_option("--max-den", approx_max_den, "largest allowed denominator")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite;
  int verify_depth = -1;
  long long verify_bound = -1;
  int verify_samples = 200;
  int verify_max_len = 20;
  bool verify_serial = false;
  verify->add_option("suite", verify_suite,
                     "main1|main2|duality|maximality|forms|int-inc|det|christoffel|cohn|closure")
      ->required();
  verify->add_option("--depth", verify_depth, "tree depth (suite-specific default)");
  verify->add_option("--bound", verify_bound, "grid bound (suite-specific default)");
  verify->add_option("--samples", verify_samples, "random samples for duality (default 200)");
  verify->add_option("--max-len", verify_max_len, "max word length for duality (default 20)");
  verify->add_flag("--serial", verify_serial, "run the serial reference sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (tree->parsed()) return run_tree(tree_kind, tree_depth, tree_format);
    if (locate->parsed()) return run_locate(locate_tree, locate_fraction);
    if (word->parsed()) {
      std::cout << sbcw::christoffel_word(sbcw::Ratio::parse(word_slope)) << "\n";
      return 0;
    }
    if (approx->parsed()) {
      sbcw::Decimal target = sbcw::parse_decimal(approx_value);
      std::cout << sbcw::best_approx(target, mpz_class(approx_max_den)).str() << "\n";
      return 0;
    }
    if (verify->parsed())
      return run_verify(verify_suite, verify_depth, verify_bound, verify_samples, verify_max_len,
                        verify_serial);
  } catch (const sbcw::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
