#ifndef GSBRAID_COMPLETION_HPP
#define GSBRAID_COMPLETION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gsbraid/core.hpp"
#include "gsbraid/rewrite.hpp"

namespace gsbraid {

struct NonDegreePreservingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class AmbiguityKind { kIntersection, kInclusion };

// The word w witnessing a critical pair of rules f and g:
//   intersection: w = lhs(f) b = a lhs(g) with a proper overlap,
//   inclusion:    w = lhs(f) = a lhs(g) b, excluding the identity case.
struct Ambiguity {
  AmbiguityKind kind = AmbiguityKind::kIntersection;
  int f_id = 0;
  int g_id = 0;
  Word w;
  Word a;
  Word b;
};

// All intersection ambiguities over all ordered rule pairs (including
// self-overlaps) plus all inclusion ambiguities, one entry per
// (kind, f, g, offset).
std::vector<Ambiguity> find_ambiguities(const RuleSystem& rules);
std::vector<Ambiguity> find_ambiguities(const RuleSystem& rules,
                                        std::size_t max_word_length);

// The two descents from the ambiguity word:
//   intersection: (rhs(f) b, a rhs(g)); inclusion: (rhs(f), a rhs(g) b).
std::pair<Word, Word> composition(const Rule& f, const Rule& g,
                                  const Ambiguity& amb);

// Normalizes both sides by `rules`; equal means the composition is trivial
// (no result), otherwise the oriented pair (deg-lex-greater side first).
std::optional<std::pair<Word, Word>> process_composition(
    const Word& p, const Word& q, const RuleSystem& rules);

struct CompletionConfig {
  std::size_t max_word_length = 32;
  std::size_t max_rules = 20'000;
  std::size_t max_ambiguities = 5'000'000;
};

enum class CompletionStatus {
  kSaturatedUpToBound,
  kRuleBudgetExhausted,
  kAmbiguityBudgetExhausted,
};

std::string_view to_string(CompletionStatus status);

struct CompletionReport {
  CompletionStatus status = CompletionStatus::kSaturatedUpToBound;
  RuleSystem rules;
  std::size_t discarded_over_length = 0;
  bool degree_preserving_input = true;
};

// Buchberger-Shirshov saturation, bounded: ambiguities are processed by
// ascending |w| (FIFO within a length) and only those with
// |w| <= max_word_length are considered; any rule whose lhs would exceed the
// bound is discarded and counted. On kSaturatedUpToBound the returned system
// reduces every composition with |w| <= max_word_length to zero.
CompletionReport complete(const Presentation& p,
                          const CompletionConfig& cfg = {});

// Removes rules whose lhs is reducible by the others and renormalizes every
// rhs by the remaining set, to a fixed point. Sound on completed systems.
RuleSystem interreduce(const RuleSystem& rules);

struct GsViolation {
  Ambiguity ambiguity;
  Word p_normal;
  Word q_normal;
};

struct VerifyReport {
  std::size_t ambiguities_checked = 0;
  std::vector<GsViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks that every composition with |w| <= max_word_length reduces to zero
// within the given system.
VerifyReport verify_gs_up_to(const RuleSystem& rules,
                             std::size_t max_word_length);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Letter x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using WordSet = std::unordered_set<Word, WordHash>;

inline constexpr std::size_t kDefaultOracleCap = 5'000'000;

// Ground-truth oracle: the full set of words reachable from w by applying
// relations in either direction anywhere. Requires a degree-preserving
// presentation (the class is finite); throws CapExceededError past `cap`.
WordSet bfs_class(const Word& w, const Presentation& p,
                  std::size_t cap = kDefaultOracleCap);

bool oracle_equal(const Word& u, const Word& v, const Presentation& p,
                  std::size_t cap = kDefaultOracleCap);

// Header "status <status> rules <k> discarded <d>" followed by one
// "rule: <lhs> -> <rhs>" line per rule, sorted by (|lhs|, deg-lex of lhs).
std::string format_completion_report(const CompletionReport& report);

}  // namespace gsbraid

#endif  // GSBRAID_COMPLETION_HPP
