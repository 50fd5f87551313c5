// Command-line driver for the braid word-problem toolkit.
//
// Exit codes: 0 success/equal, 1 distinct or violations found, 2 usage or
// parse error, 3 budget or cap exceeded. stdout carries results only;
// diagnostics go to stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gsbraid/braid.hpp"
#include "gsbraid/completion.hpp"
#include "gsbraid/garside.hpp"
#include "gsbraid/rewrite.hpp"

namespace {

using namespace gsbraid;

constexpr int kExitEqual = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

// A preset name (artin:<n>, bkl:<n+1>, coxeter:<file>) or a presentation
// file. Normal forms use the built-in pattern matcher for artin presets and
// a bounded completion for everything else.
struct Source {
  Presentation presentation;
  std::optional<int> artin_n;
};

Source resolve_source(const std::string& preset, const std::string& file) {
  if (!preset.empty() && !file.empty())
    throw ParseError("--preset and --presentation are mutually exclusive");
  if (preset.empty() && file.empty())
    throw ParseError("one of --preset or --presentation is required");
  Source source;
  if (!file.empty()) {
    source.presentation = parse_presentation(read_file(file));
    return source;
  }
  std::size_t colon = preset.find(':');
  if (colon == std::string::npos)
    throw ParseError("preset must look like artin:<n>, bkl:<n+1> or "
                     "coxeter:<file>");
  std::string kind = preset.substr(0, colon);
  std::string arg = preset.substr(colon + 1);
  if (kind == "artin") {
    int n = std::stoi(arg);
    source.presentation = artin_presentation(n);
    source.artin_n = n;
  } else if (kind == "bkl") {
    source.presentation = bkl_presentation(std::stoi(arg));
  } else if (kind == "coxeter") {
    source.presentation =
        coxeter_braid_presentation(parse_coxeter_matrix(read_file(arg)));
  } else {
    throw ParseError("unknown preset kind '" + kind + "'");
  }
  return source;
}

RuleSystem completed_system(const Source& source, std::size_t max_len,
                            std::size_t max_rules) {
  CompletionConfig cfg;
  cfg.max_word_length = max_len;
  cfg.max_rules = max_rules;
  CompletionReport report = complete(source.presentation, cfg);
  if (report.status != CompletionStatus::kSaturatedUpToBound)
    throw BudgetError("completion stopped early: " +
                      std::string(to_string(report.status)));
  std::cerr << "note: presentation completed up to length " << max_len
            << "; normal forms are only valid at that bound\n";
  return report.rules;
}

struct Options {
  std::string preset;
  std::string presentation_file;
  std::string word;
  bool word_set = false;
  std::string w1, w2;
  bool group = false;
  bool trace = false;
  bool interreduce_output = false;
  std::size_t max_len = 12;
  std::size_t max_rules = 20'000;
  std::string out_file;
  std::string strategy = "leftmost";
  std::uint64_t seed = 0xC0FFEE;
  int identities_n = 3;
  int identities_bound = 3;
};

Strategy parse_strategy(const std::string& name) {
  if (name == "leftmost") return Strategy::kLeftmost;
  if (name == "rightmost") return Strategy::kRightmost;
  if (name == "random") return Strategy::kRandom;
  throw ParseError("unknown strategy '" + name + "'");
}

std::string word_input(const Options& opt) {
  return opt.word_set ? opt.word : read_stdin();
}

int run_normalize(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  const int n = source.presentation.n_generators;
  Word w = parse_word(word_input(opt), n);
  if (source.artin_n) {
    if (opt.trace) {
      // Same line format as rewrite traces; the rule id slot carries the
      // family tag (0 = cascade, 1 = far commutation) since the rule family
      // is never materialized.
      Word current = w;
      while (auto m = match_braid_rule(current, *source.artin_n)) {
        Word next = apply_braid_rule(current, *m);
        std::cerr << (m->family == BraidRuleFamily::kCascade ? 0 : 1) << " @ "
                  << m->position << ": " << format_word(current) << " -> "
                  << format_word(next) << '\n';
        current = std::move(next);
      }
      std::cout << format_word(current) << '\n';
      return kExitEqual;
    }
    std::cout << format_word(gs_normalize(w, *source.artin_n)) << '\n';
    return kExitEqual;
  }
  RuleSystem rules = completed_system(source, opt.max_len, opt.max_rules);
  NormalizeOptions nopts;
  nopts.want_trace = opt.trace;
  nopts.strategy = parse_strategy(opt.strategy);
  nopts.seed = opt.seed;
  NormalizeResult result = normalize(w, rules, nopts);
  if (opt.trace) std::cerr << format_trace(*result.trace);
  std::cout << format_word(result.word) << '\n';
  return kExitEqual;
}

int run_eq(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  const int n = source.presentation.n_generators;
  bool equal = false;
  if (opt.group) {
    if (!source.artin_n)
      throw ParseError("--group requires an artin:<n> preset");
    InverseTable table = InverseTable::build(*source.artin_n);
    equal = group_equal(parse_signed_word(opt.w1, n),
                        parse_signed_word(opt.w2, n), table);
  } else if (source.artin_n) {
    equal = gs_normalize(parse_word(opt.w1, n), *source.artin_n) ==
            gs_normalize(parse_word(opt.w2, n), *source.artin_n);
  } else {
    RuleSystem rules = completed_system(source, opt.max_len, opt.max_rules);
    equal = normal_form(parse_word(opt.w1, n), rules) ==
            normal_form(parse_word(opt.w2, n), rules);
  }
  std::cout << (equal ? "equal" : "distinct") << '\n';
  return equal ? kExitEqual : kExitDistinct;
}

int run_oracle_eq(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  const int n = source.presentation.n_generators;
  bool equal = oracle_equal(parse_word(opt.w1, n), parse_word(opt.w2, n),
                            source.presentation);
  std::cout << (equal ? "equal" : "distinct") << '\n';
  return equal ? kExitEqual : kExitDistinct;
}

int run_delta_form(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  if (!source.artin_n)
    throw ParseError("delta-form requires an artin:<n> preset");
  const int n = *source.artin_n;
  SignedWord w = parse_signed_word(word_input(opt), n);
  std::cout << format_garside_form(group_normal_form(w, InverseTable::build(n)))
            << '\n';
  return kExitEqual;
}

int run_complete(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  CompletionConfig cfg;
  cfg.max_word_length = opt.max_len;
  cfg.max_rules = opt.max_rules;
  CompletionReport report = complete(source.presentation, cfg);
  if (opt.interreduce_output) report.rules = interreduce(report.rules);
  std::string text = format_completion_report(report);
  if (opt.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_file, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + opt.out_file + "'");
    out << text;
  }
  return report.status == CompletionStatus::kSaturatedUpToBound ? kExitEqual
                                                                : kExitBudget;
}

int run_verify(const Options& opt) {
  Source source = resolve_source(opt.preset, opt.presentation_file);
  RuleSystem rules = [&] {
    if (source.artin_n)
      return braid_rule_system(*source.artin_n, opt.max_len);
    // Orient the file's relations as given, without completing them.
    std::vector<std::pair<Word, Word>> oriented;
    for (const auto& [u, v] : source.presentation.relations) {
      auto cmp = deglex_compare(u, v);
      if (cmp == std::strong_ordering::equal) continue;
      if (cmp == std::strong_ordering::greater)
        oriented.emplace_back(u, v);
      else
        oriented.emplace_back(v, u);
    }
    return RuleSystem(source.presentation.n_generators, std::move(oriented));
  }();
  VerifyReport report = verify_gs_up_to(rules, opt.max_len);
  std::cout << "rules " << rules.size() << " ambiguities "
            << report.ambiguities_checked << " violations "
            << report.violations.size() << '\n';
  for (const GsViolation& v : report.violations)
    std::cout << "violation: " << format_word(v.ambiguity.w) << " : "
              << format_word(v.p_normal) << " != " << format_word(v.q_normal)
              << '\n';
  return report.ok() ? kExitEqual : kExitDistinct;
}

int run_identities(const Options& opt) {
  IdentityReport report = identity_suite(opt.identities_n, opt.identities_bound);
  std::cout << "checked " << report.checked << " failures "
            << report.failures.size() << '\n';
  for (const std::string& f : report.failures) std::cout << f << '\n';
  return report.ok() ? kExitEqual : kExitDistinct;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gsbraid: word problem for positive braid monoids and braid groups via "
      "a confluent rewriting system, with a generic completion engine, a "
      "brute-force equivalence oracle and Garside normal forms"};
  app.require_subcommand(1);

  Options opt;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--preset", opt.preset,
                    "artin:<n> | bkl:<n+1> | coxeter:<file> (matrix lines "
                    "'m <s> <s'> <value|inf>', size inferred, missing "
                    "entries mean no relation; bkl generators a_{ts} are "
                    "numbered lexicographically by (s, t))");
    cmd->add_option("--presentation", opt.presentation_file,
                    "presentation file (gens:/rel: lines)");
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-len", opt.max_len,
                    "word-length bound for completion/verification");
    cmd->add_option("--max-rules", opt.max_rules, "rule budget");
  };

  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "reduce a word to its normal form");
  add_source(normalize_cmd);
  add_bounds(normalize_cmd);
  auto* word_opt = normalize_cmd->add_option(
      "--word", opt.word, "input word (read from stdin when omitted)");
  normalize_cmd->add_flag("--trace", opt.trace,
                          "print the rewriting trace to stderr");
  normalize_cmd->add_option(
      "--strategy", opt.strategy,
      "match choice for completion-backed sources: leftmost|rightmost|random");
  normalize_cmd->add_option("--seed", opt.seed,
                            "seed for the random strategy");

  CLI::App* eq_cmd = app.add_subcommand("eq", "compare two words");
  add_source(eq_cmd);
  add_bounds(eq_cmd);
  eq_cmd->add_option("--w1", opt.w1, "first word")->required();
  eq_cmd->add_option("--w2", opt.w2, "second word")->required();
  eq_cmd->add_flag("--group", opt.group,
                   "treat the words as signed group words");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-eq", "compare two positive words with the BFS oracle");
  add_source(oracle_cmd);
  oracle_cmd->add_option("--w1", opt.w1, "first word")->required();
  oracle_cmd->add_option("--w2", opt.w2, "second word")->required();

  CLI::App* delta_cmd = app.add_subcommand(
      "delta-form", "Garside normal form D^k | u of a signed word");
  add_source(delta_cmd);
  auto* delta_word_opt = delta_cmd->add_option(
      "--word", opt.word, "signed input word (stdin when omitted)");

  CLI::App* complete_cmd =
      app.add_subcommand("complete", "bounded Buchberger-Shirshov completion");
  add_source(complete_cmd);
  add_bounds(complete_cmd);
  complete_cmd->add_option("--out", opt.out_file, "write the report here");
  complete_cmd->add_flag("--interreduce", opt.interreduce_output,
                         "interreduce the completed system before printing");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "check that all bounded compositions of the rule system are trivial");
  add_source(verify_cmd);
  add_bounds(verify_cmd);

  CLI::App* identities_cmd = app.add_subcommand(
      "identities", "check the descending-run identities by normal form");
  identities_cmd->add_option("--n", opt.identities_n, "generator count");
  identities_cmd->add_option("--bound", opt.identities_bound,
                             "exponent bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, std::cout, std::cerr);
    return code == 0 ? 0 : kExitUsage;
  }

  opt.word_set = word_opt->count() > 0 || delta_word_opt->count() > 0;

  try {
    if (app.got_subcommand(normalize_cmd)) return run_normalize(opt);
    if (app.got_subcommand(eq_cmd)) return run_eq(opt);
    if (app.got_subcommand(oracle_cmd)) return run_oracle_eq(opt);
    if (app.got_subcommand(delta_cmd)) return run_delta_form(opt);
    if (app.got_subcommand(complete_cmd)) return run_complete(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify(opt);
    if (app.got_subcommand(identities_cmd)) return run_identities(opt);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
