#ifndef GSBRAID_GARSIDE_HPP
#define GSBRAID_GARSIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsbraid/completion.hpp"
#include "gsbraid/core.hpp"

namespace gsbraid {

// Conjugation by the fundamental word: a_i -> a_{n+1-i}. Satisfies
// g . Delta = Delta . tau(g) letterwise, hence for all words.
Word tau(const Word& w, int n);

// Tests whether some word equivalent to v starts literally with Delta, by
// the structural criterion on the reduced form of v:
//   v = L_1 V_1 L_2 V_2 ... L_{n-1} V_{n-1} L_n u
// with L_k = a_k...a_1 literal and each V_k over a_1..a_k, empty or
// a_1-initial. On success returns the reduced left quotient r with
// v ~ Delta r, computed by shifting each V_k up by n-k.
std::optional<Word> delta_prefix(const Word& v, int n);

struct PositiveGarside {
  std::size_t delta_power = 0;
  Word tail;
};

// Maximal s and reduced Delta-prefix-free u with v ~ Delta^s u.
PositiveGarside positive_garside_form(const Word& v, int n);

// Raised by InverseTable::build if Delta's class lacks a representative
// starting with some generator (cannot happen for valid braid data).
struct NoRepresentativeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// For each generator the positive word X_i with a_i X_i = Delta, read off a
// representative of Delta's equivalence class that starts with a_i.
class InverseTable {
 public:
  static InverseTable build(int n, std::size_t cap = kDefaultOracleCap);

  int n_generators() const { return n_; }
  // X_i, of length n(n+1)/2 - 1.
  const Word& left_complement(int generator) const;

 private:
  InverseTable(int n, std::vector<Word> complements)
      : n_(n), complements_(std::move(complements)) {}

  int n_;
  std::vector<Word> complements_;
};

// The unique presentation Delta^k u of a braid group element with u a
// reduced positive word not beginning with Delta in any presentation.
struct GarsideForm {
  int n_generators = 0;
  long long delta_power = 0;
  Word tail;

  bool operator==(const GarsideForm&) const = default;
};

// "D^<k> | <tail>", e.g. "D^-1 | 2 1".
std::string format_garside_form(const GarsideForm& form);

// Replaces each a_i^{-1} by X_i Delta^{-1}, pushes every Delta^{-1} to the
// far left through g Delta^{-1} = Delta^{-1} tau(g), then normalizes the
// positive remainder and strips its maximal Delta power.
GarsideForm group_normal_form(const SignedWord& w, const InverseTable& table);
GarsideForm group_normal_form(const SignedWord& w, int n);

bool group_equal(const SignedWord& u, const SignedWord& v,
                 const InverseTable& table);
bool group_equal(const SignedWord& u, const SignedWord& v, int n);

bool group_is_identity(const SignedWord& w, const InverseTable& table);
bool group_is_identity(const SignedWord& w, int n);

}  // namespace gsbraid

#endif  // GSBRAID_GARSIDE_HPP
