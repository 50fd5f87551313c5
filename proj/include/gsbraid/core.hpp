#ifndef GSBRAID_CORE_HPP
#define GSBRAID_CORE_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsbraid {

// Generators are the 1-based indices of a_1 .. a_n; a presentation on n
// generators describes the braid monoid of B_{n+1}. Words are flat letter
// sequences, the empty word is the monoid identity.
using Letter = int;
using Word = std::vector<Letter>;

// Group words carry the sign on the letter: -i encodes a_i^{-1}.
struct SignedWord {
  std::vector<Letter> letters;

  bool operator==(const SignedWord&) const = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a step budget or a state cap is exhausted.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : BudgetError {
  using BudgetError::BudgetError;
};

struct Presentation {
  int n_generators = 0;
  std::vector<std::pair<Word, Word>> relations;
  // true iff every relation has |lhs| == |rhs|; computed, never asserted by
  // callers.
  bool degree_preserving = true;
};

// Validates ranges and computes the degree_preserving flag.
Presentation make_presentation(int n_generators,
                               std::vector<std::pair<Word, Word>> relations);

void validate_word(const Word& w, int n_generators);
void validate_signed_word(const SignedWord& w, int n_generators);

// Length first, then letterwise with a_1 < a_2 < ... < a_n. A monomial well
// order: u < v implies aub < avb.
std::strong_ordering deglex_compare(const Word& u, const Word& v) noexcept;

// a_i a_{i-1} ... a_j; empty when j == i + 1. Rejects j > i + 1.
Word descending_run(int i, int j);

// a_i^{p_0} a_{i-1}^{p_1} ... a_j^{p_{i-j}}; empty when j == i + 1.
Word powered_run(int i, int j, const std::vector<int>& exponents);

// Lambda_i = a_i a_{i-1} ... a_1.
Word lambda_word(int i);

// Delta = Lambda_1 Lambda_2 ... Lambda_n, of length n(n+1)/2.
Word delta_word(int n);

// Letterwise substitution a_k -> a_{k+d}; every image must stay in [1, n].
Word shift_letters(const Word& w, int d, int n_generators);

Word concat(const Word& u, const Word& v);
void append_word(Word& target, const Word& suffix);
Word repeat(const Word& w, std::size_t times);

// Text format: generator indices separated by single spaces; "" is the
// empty word. Signed words put an optional '-' on each token ("2 -1 3").
Word parse_word(std::string_view text, int n_generators);
std::string format_word(const Word& w);
SignedWord parse_signed_word(std::string_view text, int n_generators);
std::string format_signed_word(const SignedWord& w);

// Line-based presentation file:
//   gens: <n>
//   rel: <word> = <word>
// '#' starts a comment line, blank lines are ignored, anything else is an
// error.
Presentation parse_presentation(std::string_view text);

}  // namespace gsbraid

#endif  // GSBRAID_CORE_HPP
