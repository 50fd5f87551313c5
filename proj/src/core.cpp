#include "gsbraid/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gsbraid {

namespace {

constexpr int kMaxGenerators = 120;

void check_generator_count(int n) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("generator count must be in [1, " +
                                std::to_string(kMaxGenerators) + "], got " +
                                std::to_string(n));
}

int parse_int_token(std::string_view token) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("malformed token '" + std::string(token) + "'");
  return value;
}

template <typename Emit>
void split_tokens(std::string_view text, Emit emit) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) emit(text.substr(start, pos - start));
  }
}

}  // namespace

void validate_word(const Word& w, int n_generators) {
  check_generator_count(n_generators);
  for (Letter x : w)
    if (x < 1 || x > n_generators)
      throw std::invalid_argument("letter " + std::to_string(x) +
                                  " out of range [1, " +
                                  std::to_string(n_generators) + "]");
}

void validate_signed_word(const SignedWord& w, int n_generators) {
  check_generator_count(n_generators);
  for (Letter x : w.letters) {
    int g = x < 0 ? -x : x;
    if (g < 1 || g > n_generators)
      throw std::invalid_argument("signed letter " + std::to_string(x) +
                                  " out of range for n = " +
                                  std::to_string(n_generators));
  }
}

Presentation make_presentation(int n_generators,
                               std::vector<std::pair<Word, Word>> relations) {
  check_generator_count(n_generators);
  Presentation p;
  p.n_generators = n_generators;
  p.degree_preserving = true;
  for (const auto& [lhs, rhs] : relations) {
    validate_word(lhs, n_generators);
    validate_word(rhs, n_generators);
    if (lhs.size() != rhs.size()) p.degree_preserving = false;
  }
  p.relations = std::move(relations);
  return p;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) noexcept {
  if (u.size() != v.size())
    return u.size() < v.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(),
                                                v.end());
}

Word descending_run(int i, int j) {
  if (j > i + 1)
    throw std::invalid_argument("descending_run requires j <= i + 1");
  if (j == i + 1) return {};
  if (j < 1) throw std::invalid_argument("descending_run requires j >= 1");
  Word w;
  w.reserve(static_cast<std::size_t>(i - j + 1));
  for (int k = i; k >= j; --k) w.push_back(k);
  return w;
}

Word powered_run(int i, int j, const std::vector<int>& exponents) {
  if (j > i + 1)
    throw std::invalid_argument("powered_run requires j <= i + 1");
  const std::size_t expected = j == i + 1 ? 0 : static_cast<std::size_t>(i - j + 1);
  if (exponents.size() != expected)
    throw std::invalid_argument("powered_run: expected " +
                                std::to_string(expected) + " exponents, got " +
                                std::to_string(exponents.size()));
  if (j != i + 1 && j < 1)
    throw std::invalid_argument("powered_run requires j >= 1");
  Word w;
  for (int k = i; k >= j; --k) {
    int e = exponents[static_cast<std::size_t>(i - k)];
    if (e < 1) throw std::invalid_argument("powered_run exponents must be >= 1");
    for (int t = 0; t < e; ++t) w.push_back(k);
  }
  return w;
}

Word lambda_word(int i) {
  if (i < 1) throw std::invalid_argument("lambda_word requires i >= 1");
  return descending_run(i, 1);
}

Word delta_word(int n) {
  check_generator_count(n);
  Word w;
  w.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 1; i <= n; ++i) append_word(w, lambda_word(i));
  return w;
}

Word shift_letters(const Word& w, int d, int n_generators) {
  check_generator_count(n_generators);
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    int y = x + d;
    if (y < 1 || y > n_generators)
      throw std::invalid_argument("shift_letters: a_" + std::to_string(x) +
                                  " shifted by " + std::to_string(d) +
                                  " leaves [1, " +
                                  std::to_string(n_generators) + "]");
    out.push_back(y);
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  append_word(out, v);
  return out;
}

void append_word(Word& target, const Word& suffix) {
  target.insert(target.end(), suffix.begin(), suffix.end());
}

Word repeat(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t k = 0; k < times; ++k) append_word(out, w);
  return out;
}

Word parse_word(std::string_view text, int n_generators) {
  check_generator_count(n_generators);
  Word w;
  split_tokens(text, [&](std::string_view token) {
    int value = parse_int_token(token);
    if (value < 1 || value > n_generators)
      throw ParseError("generator index " + std::to_string(value) +
                       " out of range [1, " + std::to_string(n_generators) +
                       "]");
    w.push_back(value);
  });
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(w[k]);
  }
  return out;
}

SignedWord parse_signed_word(std::string_view text, int n_generators) {
  check_generator_count(n_generators);
  SignedWord w;
  split_tokens(text, [&](std::string_view token) {
    int value = parse_int_token(token);
    int g = value < 0 ? -value : value;
    if (g < 1 || g > n_generators)
      throw ParseError("generator index " + std::to_string(value) +
                       " out of range for n = " + std::to_string(n_generators));
    w.letters.push_back(value);
  });
  return w;
}

std::string format_signed_word(const SignedWord& w) {
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(w.letters[k]);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  int n_generators = -1;
  std::vector<std::pair<Word, Word>> relations;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (pos > text.size()) break;
      continue;  // blank
    }
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (pos > text.size()) break;
      continue;
    }

    auto fail = [&](const std::string& what) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };

    if (line.starts_with("gens:")) {
      if (n_generators != -1) fail("duplicate gens: directive");
      std::string_view rest = line.substr(5);
      std::size_t s = rest.find_first_not_of(" \t");
      if (s == std::string_view::npos) fail("gens: needs a count");
      n_generators = parse_int_token(rest.substr(s));
      if (n_generators < 1) fail("generator count must be positive");
    } else if (line.starts_with("rel:")) {
      if (n_generators == -1) fail("rel: before gens:");
      std::string_view body = line.substr(4);
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) fail("rel: line is missing '='");
      Word lhs, rhs;
      try {
        lhs = parse_word(body.substr(0, eq), n_generators);
        rhs = parse_word(body.substr(eq + 1), n_generators);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      relations.emplace_back(std::move(lhs), std::move(rhs));
    } else {
      fail("unknown directive '" + std::string(line.substr(0, line.find(' '))) +
           "'");
    }
    if (pos > text.size()) break;
  }
  if (n_generators == -1) throw ParseError("missing gens: directive");
  return make_presentation(n_generators, std::move(relations));
}

}  // namespace gsbraid
