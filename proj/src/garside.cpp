#include "gsbraid/garside.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "gsbraid/braid.hpp"

namespace gsbraid {

Word tau(const Word& w, int n) {
  validate_word(w, n);
  Word out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(n + 1 - x);
  return out;
}

std::optional<Word> delta_prefix(const Word& v_in, int n) {
  Word v = gs_normalize(v_in, n);
  const std::size_t delta_len = static_cast<std::size_t>(n) * (n + 1) / 2;
  if (v.size() < delta_len) return std::nullopt;

  std::size_t pos = 0;
  std::vector<Word> segments;  // V_1 .. V_{n-1}
  segments.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    for (int letter = k; letter >= 1; --letter) {  // literal Lambda_k
      if (pos >= v.size() || v[pos] != letter) return std::nullopt;
      ++pos;
    }
    if (k == n) break;
    // V_k runs up to the a_{k+1} that opens Lambda_{k+1}; it may only use
    // a_1..a_k and must be empty or start with a_1.
    Word segment;
    while (pos < v.size() && v[pos] <= k) segment.push_back(v[pos++]);
    if (pos >= v.size() || v[pos] != k + 1) return std::nullopt;
    if (!segment.empty() && segment.front() != 1) return std::nullopt;
    segments.push_back(std::move(segment));
  }

  Word quotient;
  quotient.reserve(v.size() - delta_len);
  for (int k = 1; k <= n - 1; ++k)
    append_word(quotient,
                shift_letters(segments[static_cast<std::size_t>(k - 1)], n - k, n));
  quotient.insert(quotient.end(), v.begin() + static_cast<std::ptrdiff_t>(pos),
                  v.end());
  return gs_normalize(quotient, n);
}

PositiveGarside positive_garside_form(const Word& v, int n) {
  PositiveGarside result;
  result.tail = gs_normalize(v, n);
  while (auto quotient = delta_prefix(result.tail, n)) {
    ++result.delta_power;
    result.tail = std::move(*quotient);
  }
  return result;
}

InverseTable InverseTable::build(int n, std::size_t cap) {
  const Presentation artin = artin_presentation(n);
  const Word delta = delta_word(n);

  auto encode = [](const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(static_cast<char>(x));
    return s;
  };
  std::vector<std::pair<std::string, std::string>> moves;
  for (const auto& [u, v] : artin.relations) {
    moves.emplace_back(encode(u), encode(v));
    moves.emplace_back(encode(v), encode(u));
  }

  // Breadth-first over Delta's class, stopping once a representative with
  // every possible first letter has been seen.
  std::vector<Word> complements(static_cast<std::size_t>(n));
  int remaining = n;
  std::unordered_set<std::string> visited;
  std::deque<std::string> frontier;
  frontier.push_back(encode(delta));
  visited.insert(frontier.back());
  while (!frontier.empty() && remaining > 0) {
    std::string state = std::move(frontier.front());
    frontier.pop_front();
    const int first = static_cast<int>(state[0]);
    Word& slot = complements[static_cast<std::size_t>(first - 1)];
    if (slot.empty() && state.size() > 1) {
      Word suffix;
      suffix.reserve(state.size() - 1);
      for (std::size_t k = 1; k < state.size(); ++k)
        suffix.push_back(static_cast<Letter>(state[k]));
      slot = gs_normalize(suffix, n);
      --remaining;
      if (remaining == 0) break;
    }
    for (const auto& [from, to] : moves) {
      for (std::size_t posn = 0; posn + from.size() <= state.size(); ++posn) {
        if (state.compare(posn, from.size(), from) != 0) continue;
        std::string next = state;
        next.replace(posn, from.size(), to);
        if (!visited.insert(next).second) continue;
        if (visited.size() > cap)
          throw CapExceededError(
              "InverseTable::build exceeded its state cap of " +
              std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }
  if (remaining > 0 && n > 1)
    throw NoRepresentativeError(
        "Delta's class has no representative starting with some generator");
  if (n == 1) complements[0] = Word{};  // Delta = a_1, X_1 is empty
  return InverseTable(n, std::move(complements));
}

const Word& InverseTable::left_complement(int generator) const {
  if (generator < 1 || generator > n_)
    throw std::invalid_argument("generator out of range");
  return complements_[static_cast<std::size_t>(generator - 1)];
}

std::string format_garside_form(const GarsideForm& form) {
  std::string out = "D^" + std::to_string(form.delta_power) + " |";
  if (!form.tail.empty()) {
    out += ' ';
    out += format_word(form.tail);
  }
  return out;
}

GarsideForm group_normal_form(const SignedWord& w, const InverseTable& table) {
  const int n = table.n_generators();
  validate_signed_word(w, n);
  long long negative_power = 0;
  Word positive;
  for (Letter x : w.letters) {
    if (x > 0) {
      positive.push_back(x);
    } else {
      // a_i X_i = Delta gives a_i^{-1} = X_i Delta^{-1}; commuting the
      // Delta^{-1} to the far left through g Delta^{-1} = Delta^{-1} tau(g)
      // turns the accumulated positive part p into tau(p) tau(X_i), and
      // tau(X_i) = X_{n+1-i}.
      ++negative_power;
      positive = tau(positive, n);
      append_word(positive, table.left_complement(n + 1 + x));
    }
  }
  PositiveGarside garside = positive_garside_form(positive, n);
  return GarsideForm{n,
                     static_cast<long long>(garside.delta_power) -
                         negative_power,
                     std::move(garside.tail)};
}

GarsideForm group_normal_form(const SignedWord& w, int n) {
  return group_normal_form(w, InverseTable::build(n));
}

bool group_equal(const SignedWord& u, const SignedWord& v,
                 const InverseTable& table) {
  return group_normal_form(u, table) == group_normal_form(v, table);
}

bool group_equal(const SignedWord& u, const SignedWord& v, int n) {
  return group_equal(u, v, InverseTable::build(n));
}

bool group_is_identity(const SignedWord& w, const InverseTable& table) {
  GarsideForm form = group_normal_form(w, table);
  return form.delta_power == 0 && form.tail.empty();
}

bool group_is_identity(const SignedWord& w, int n) {
  return group_is_identity(w, InverseTable::build(n));
}

}  // namespace gsbraid
