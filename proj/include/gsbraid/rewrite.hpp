#ifndef GSBRAID_REWRITE_HPP
#define GSBRAID_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsbraid/core.hpp"

namespace gsbraid {

// An oriented semigroup relation: lhs is the deg-lex-greater side and is
// eliminated in favour of rhs.
struct Rule {
  int id = 0;
  Word lhs;
  Word rhs;
};

namespace detail {

// Prefix trie over rule left-hand sides, used to find all rules whose lhs
// starts at a given text position in one walk.
struct PatternTrie {
  struct Node {
    std::vector<std::int32_t> next;  // alphabet+1 entries, -1 = none
    std::int32_t min_rule = -1;      // smallest rule id terminating here
  };
  int alphabet = 0;
  std::vector<Node> nodes;

  void build(const std::vector<Rule>& rules, int alphabet_size);
  bool empty() const { return nodes.empty(); }
};

}  // namespace detail

// Beyond this many rules a RuleSystem matches through a prefix trie instead
// of scanning rules one by one.
inline constexpr std::size_t kRuleIndexThreshold = 64;

class RuleSystem {
 public:
  RuleSystem(int n_generators, std::vector<std::pair<Word, Word>> oriented);

  int n_generators() const { return n_generators_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(int id) const { return rules_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  // Smallest rule id whose lhs occurs at position pos of w, or -1.
  int match_at(const Word& w, std::size_t pos) const;

 private:
  int n_generators_;
  std::vector<Rule> rules_;
  detail::PatternTrie trie_;  // built only past kRuleIndexThreshold
};

struct Match {
  int rule_id = 0;
  std::size_t position = 0;
};

struct RewriteStep {
  int rule_id = 0;
  std::size_t position = 0;
  Word before;
  Word after;
};

struct Trace {
  std::vector<RewriteStep> steps;
};

// One step per line: "<rule_id> @ <position>: <before> -> <after>".
std::string format_trace(const Trace& trace);

enum class Strategy { kLeftmost, kRightmost, kRandom };

struct NormalizeOptions {
  Strategy strategy = Strategy::kLeftmost;
  std::uint64_t seed = 0;  // used by Strategy::kRandom only
  std::size_t step_budget = 1'000'000;
  bool want_trace = false;
};

struct NormalizeResult {
  Word word;
  std::optional<Trace> trace;
};

// Leftmost occurrence of any rule lhs in w; ties at one position go to the
// smallest rule id. Empty iff w is reduced.
std::optional<Match> find_match(const Word& w, const RuleSystem& rules);

std::optional<RewriteStep> reduce_once(const Word& w, const RuleSystem& rules);

// Reduces to the fixed point. Throws BudgetError past opts.step_budget,
// which well-oriented rule systems never hit.
NormalizeResult normalize(const Word& w, const RuleSystem& rules,
                          const NormalizeOptions& opts = {});

Word normal_form(const Word& w, const RuleSystem& rules);

bool is_reduced(const Word& w, const RuleSystem& rules);

}  // namespace gsbraid

#endif  // GSBRAID_REWRITE_HPP
