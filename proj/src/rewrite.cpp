#include "gsbraid/rewrite.hpp"

#include <algorithm>
#include <random>

namespace gsbraid {

namespace detail {

void PatternTrie::build(const std::vector<Rule>& rules, int alphabet_size) {
  alphabet = alphabet_size;
  nodes.clear();
  nodes.emplace_back();
  nodes.back().next.assign(static_cast<std::size_t>(alphabet) + 1, -1);
  for (const Rule& r : rules) {
    std::int32_t node = 0;
    for (Letter x : r.lhs) {
      std::int32_t& slot = nodes[static_cast<std::size_t>(node)]
                               .next[static_cast<std::size_t>(x)];
      if (slot == -1) {
        slot = static_cast<std::int32_t>(nodes.size());
        nodes.emplace_back();
        nodes.back().next.assign(static_cast<std::size_t>(alphabet) + 1, -1);
      }
      node = slot;
    }
    Node& terminal = nodes[static_cast<std::size_t>(node)];
    if (terminal.min_rule == -1 || r.id < terminal.min_rule)
      terminal.min_rule = r.id;
  }
}

}  // namespace detail

RuleSystem::RuleSystem(int n_generators,
                       std::vector<std::pair<Word, Word>> oriented)
    : n_generators_(n_generators) {
  rules_.reserve(oriented.size());
  int id = 0;
  for (auto& [lhs, rhs] : oriented) {
    validate_word(lhs, n_generators);
    validate_word(rhs, n_generators);
    if (lhs.empty()) throw std::invalid_argument("rule lhs must be nonempty");
    if (deglex_compare(lhs, rhs) != std::strong_ordering::greater)
      throw std::invalid_argument("rule must be oriented: lhs '" +
                                  format_word(lhs) +
                                  "' is not deg-lex-greater than rhs '" +
                                  format_word(rhs) + "'");
    rules_.push_back(Rule{id++, std::move(lhs), std::move(rhs)});
  }
  if (rules_.size() > kRuleIndexThreshold) trie_.build(rules_, n_generators_);
}

int RuleSystem::match_at(const Word& w, std::size_t pos) const {
  if (!trie_.empty()) {
    std::int32_t node = 0;
    int best = -1;
    for (std::size_t k = pos; k < w.size(); ++k) {
      node = trie_.nodes[static_cast<std::size_t>(node)]
                 .next[static_cast<std::size_t>(w[k])];
      if (node == -1) break;
      std::int32_t terminal = trie_.nodes[static_cast<std::size_t>(node)].min_rule;
      if (terminal != -1 && (best == -1 || terminal < best)) best = terminal;
    }
    return best;
  }
  for (const Rule& r : rules_) {
    if (r.lhs.size() > w.size() - pos) continue;
    if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
      return r.id;
  }
  return -1;
}

std::optional<Match> find_match(const Word& w, const RuleSystem& rules) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int id = rules.match_at(w, pos);
    if (id != -1) return Match{id, pos};
  }
  return std::nullopt;
}

namespace {

Word splice(const Word& w, std::size_t pos, const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(w.size() - lhs.size() + rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()),
             w.end());
  return out;
}

std::optional<Match> pick_match(const Word& w, const RuleSystem& rules,
                                Strategy strategy, std::mt19937_64& rng) {
  switch (strategy) {
    case Strategy::kLeftmost:
      return find_match(w, rules);
    case Strategy::kRightmost: {
      for (std::size_t k = w.size(); k-- > 0;) {
        int id = rules.match_at(w, k);
        if (id != -1) return Match{id, k};
      }
      return std::nullopt;
    }
    case Strategy::kRandom: {
      std::vector<Match> all;
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (const Rule& r : rules.rules())
          if (r.lhs.size() <= w.size() - pos &&
              std::equal(r.lhs.begin(), r.lhs.end(),
                         w.begin() + static_cast<std::ptrdiff_t>(pos)))
            all.push_back(Match{r.id, pos});
      if (all.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng)];
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RewriteStep> reduce_once(const Word& w, const RuleSystem& rules) {
  auto m = find_match(w, rules);
  if (!m) return std::nullopt;
  const Rule& r = rules.rule(m->rule_id);
  return RewriteStep{m->rule_id, m->position, w,
                     splice(w, m->position, r.lhs, r.rhs)};
}

NormalizeResult normalize(const Word& w, const RuleSystem& rules,
                          const NormalizeOptions& opts) {
  validate_word(w, rules.n_generators());
  NormalizeResult result;
  result.word = w;
  if (opts.want_trace) result.trace.emplace();
  std::mt19937_64 rng(opts.seed);
  std::size_t steps = 0;
  for (;;) {
    auto m = pick_match(result.word, rules, opts.strategy, rng);
    if (!m) break;
    if (++steps > opts.step_budget)
      throw BudgetError("normalize exceeded its step budget of " +
                        std::to_string(opts.step_budget) +
                        "; the rule system is probably misoriented");
    const Rule& r = rules.rule(m->rule_id);
    Word next = splice(result.word, m->position, r.lhs, r.rhs);
    if (opts.want_trace)
      result.trace->steps.push_back(
          RewriteStep{m->rule_id, m->position, result.word, next});
    result.word = std::move(next);
  }
  return result;
}

Word normal_form(const Word& w, const RuleSystem& rules) {
  return normalize(w, rules).word;
}

bool is_reduced(const Word& w, const RuleSystem& rules) {
  return !find_match(w, rules).has_value();
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const RewriteStep& s : trace.steps) {
    out += std::to_string(s.rule_id);
    out += " @ ";
    out += std::to_string(s.position);
    out += ": ";
    out += format_word(s.before);
    out += " -> ";
    out += format_word(s.after);
    out += '\n';
  }
  return out;
}

}  // namespace gsbraid
