#ifndef GSBRAID_BRAID_HPP
#define GSBRAID_BRAID_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsbraid/core.hpp"
#include "gsbraid/rewrite.hpp"

namespace gsbraid {

// Artin presentation of the positive braid monoid of B_{n+1}:
// a_{i+1} a_i a_{i+1} = a_i a_{i+1} a_i and a_s a_k = a_k a_s for s - k >= 2.
Presentation artin_presentation(int n);

// Birman-Ko-Lee band-generator presentation of the positive braids of
// B_{n+1}. The generator a_{ts} for the strand pair 1 <= t < s <= n+1 is
// flattened to an index in lexicographic (s, t) order:
//   n+1 = 3 gives a_{21} -> 1, a_{31} -> 2, a_{32} -> 3.
Presentation bkl_presentation(int n_plus_1);

// Entry value meaning "no relation between this pair".
inline constexpr int kCoxeterInfinity = 0;

struct CoxeterMatrix {
  int size = 0;
  std::vector<int> entries;  // row-major (size x size), diagonal unused

  static CoxeterMatrix make(int size);
  int at(int s, int t) const;
  void set(int s, int t, int m);  // keeps the matrix symmetric
};

// Lines "m <s> <s'> <value|inf>"; size is the largest index mentioned and
// unspecified pairs carry no relation.
CoxeterMatrix parse_coxeter_matrix(std::string_view text);

// W+ = smg< s_1..s_l | m(s,s') = m(s',s) for s > s', finite entries > where
// m(s,s') is the alternating word s s' s ... of length m_{ss'}.
Presentation coxeter_braid_presentation(const CoxeterMatrix& matrix);

// The rewriting rules of the positive braid monoid form two families:
//
//   cascade:          a_{i+1} a_i V W a_{i+1}a_i...a_j
//                       -> a_i a_{i+1} a_i V (a_i...a_j) W^{+1}
//                     with V over a_1..a_{i-1}, W over a_j..a_i empty or
//                     a_i-initial, 1 <= i <= n-1, 1 <= j <= i+1, and W^{+1}
//                     the letterwise shift a_k -> a_{k+1};
//   far commutation:  a_s a_k -> a_k a_s for s - k >= 2.
//
// The cascade family is infinite, so it lives here as a matcher/applier
// rather than as a materialized rule list.
enum class BraidRuleFamily { kCascade, kFarCommutation };

struct BraidRuleMatch {
  std::size_t position = 0;
  int i = 0;  // cascade: the i above; far commutation: the higher letter s
  int j = 0;  // cascade: the j above; far commutation: the lower letter k
  std::size_t v_len = 0;
  std::size_t w_len = 0;
  BraidRuleFamily family = BraidRuleFamily::kCascade;

  std::size_t factor_length() const {
    if (family == BraidRuleFamily::kFarCommutation) return 2;
    return 2 + v_len + w_len + static_cast<std::size_t>(i + 2 - j);
  }
  bool operator==(const BraidRuleMatch&) const = default;
};

// Longest match starting exactly at `position`, if any.
std::optional<BraidRuleMatch> match_braid_rule_at(const Word& w, int n,
                                                  std::size_t position);

// Leftmost match; at a fixed position the two families are mutually
// exclusive and the cascade parse is unique once the factor length is
// maximized, so this is deterministic. Empty iff w is a normal form.
std::optional<BraidRuleMatch> match_braid_rule(const Word& w, int n);

Word apply_braid_rule(const Word& w, const BraidRuleMatch& m);

// Iterates match/apply (leftmost) to the unique normal form. All rules
// preserve length, so |result| == |w|.
Word gs_normalize(const Word& w, int n, std::size_t step_budget = 1'000'000);

// Materializes every rule of the two families with |lhs| <= max_lhs_length.
RuleSystem braid_rule_system(int n, std::size_t max_lhs_length);

struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Checks the run identities
//   a_{i,j-1} a_{i+1,j-1}       = a_{i+1,j-1} a_{i+1,j}
//   a_{i,j-1}(p) a_{i+1,j-1}    = a_{i+1,j-1} a_{i+1,j}(p)
//   a_s a_{i+1,j}               = a_{i+1,j} a_{s+1}   (j <= s <= i)
// for every admissible index tuple, with exponent vectors bounded by
// exponent_bound, by comparing normal forms of both sides.
IdentityReport identity_suite(int n, int exponent_bound);

}  // namespace gsbraid

#endif  // GSBRAID_BRAID_HPP
