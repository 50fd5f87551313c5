#include "gsbraid/braid.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace gsbraid {

Presentation artin_presentation(int n) {
  std::vector<std::pair<Word, Word>> relations;
  for (int i = 1; i + 1 <= n; ++i)
    relations.emplace_back(Word{i + 1, i, i + 1}, Word{i, i + 1, i});
  for (int s = 3; s <= n; ++s)
    for (int k = 1; k <= s - 2; ++k)
      relations.emplace_back(Word{s, k}, Word{k, s});
  return make_presentation(n, std::move(relations));
}

namespace {

// Flattened index of the band generator for the strand pair {t, s}, t < s,
// in lexicographic (s, t) order, 1-based.
int bkl_index(int t, int s) {
  // pairs with second component < s come first: (s-1)(s-2)/2 of them
  return (s - 1) * (s - 2) / 2 + t;
}

}  // namespace

Presentation bkl_presentation(int n_plus_1) {
  if (n_plus_1 < 2)
    throw std::invalid_argument("bkl_presentation requires n+1 >= 2");
  const int strands = n_plus_1;
  const int n_generators = strands * (strands - 1) / 2;
  std::vector<std::pair<Word, Word>> relations;

  // Chains x > y > z: a_{xy} a_{yz} = a_{xz} a_{xy} = a_{yz} a_{xz},
  // emitted as two pairwise relations.
  for (int x = 3; x <= strands; ++x)
    for (int y = 2; y < x; ++y)
      for (int z = 1; z < y; ++z) {
        int xy = bkl_index(y, x), yz = bkl_index(z, y), xz = bkl_index(z, x);
        relations.emplace_back(Word{xy, yz}, Word{xz, xy});
        relations.emplace_back(Word{xz, xy}, Word{yz, xz});
      }

  // Commutations between strand pairs that neither share a strand nor
  // interleave: the product of all four strand differences is positive.
  for (int s1 = 2; s1 <= strands; ++s1)
    for (int t1 = 1; t1 < s1; ++t1)
      for (int s2 = 2; s2 <= strands; ++s2)
        for (int t2 = 1; t2 < s2; ++t2) {
          int g1 = bkl_index(t1, s1), g2 = bkl_index(t2, s2);
          if (g1 <= g2) continue;  // emit each unordered pair once
          long long sign = static_cast<long long>(t1 - t2) * (t1 - s2) *
                           (s1 - t2) * (s1 - s2);
          if (sign > 0) relations.emplace_back(Word{g1, g2}, Word{g2, g1});
        }
  return make_presentation(n_generators, std::move(relations));
}

CoxeterMatrix CoxeterMatrix::make(int size) {
  if (size < 1) throw std::invalid_argument("Coxeter matrix needs size >= 1");
  CoxeterMatrix m;
  m.size = size;
  m.entries.assign(static_cast<std::size_t>(size) * size, kCoxeterInfinity);
  return m;
}

int CoxeterMatrix::at(int s, int t) const {
  if (s < 1 || s > size || t < 1 || t > size)
    throw std::invalid_argument("Coxeter matrix index out of range");
  return entries[static_cast<std::size_t>(s - 1) * size + (t - 1)];
}

void CoxeterMatrix::set(int s, int t, int m) {
  if (s < 1 || s > size || t < 1 || t > size)
    throw std::invalid_argument("Coxeter matrix index out of range");
  if (s == t) throw std::invalid_argument("Coxeter matrix diagonal is unused");
  if (m != kCoxeterInfinity && m < 2)
    throw std::invalid_argument("Coxeter matrix entries must be >= 2 or inf");
  entries[static_cast<std::size_t>(s - 1) * size + (t - 1)] = m;
  entries[static_cast<std::size_t>(t - 1) * size + (s - 1)] = m;
}

CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
  struct Entry {
    int s, t, m;
  };
  std::vector<Entry> seen;
  int max_index = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    bool last = end == text.size();
    pos = end + 1;
    ++line_no;
    auto fail = [&](const std::string& what) {
      throw ParseError("coxeter line " + std::to_string(line_no) + ": " + what);
    };
    // trim
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') {
      if (last) break;
      continue;
    }
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    char head = 0;
    char inf_buf[8] = {0};
    int s = 0, t = 0, m = 0;
    if (std::sscanf(line.c_str(), "%c %d %d %d", &head, &s, &t, &m) == 4 &&
        head == 'm') {
      if (m < 2) fail("entry must be >= 2 or inf");
    } else if (std::sscanf(line.c_str(), "%c %d %d %7s", &head, &s, &t,
                           inf_buf) == 4 &&
               head == 'm' && std::string_view(inf_buf) == "inf") {
      m = kCoxeterInfinity;
    } else {
      fail("expected 'm <s> <s'> <value|inf>'");
    }
    if (s < 1 || t < 1 || s == t) fail("bad generator pair");
    seen.push_back(Entry{s, t, m});
    max_index = std::max({max_index, s, t});
    if (last) break;
  }
  if (max_index == 0) throw ParseError("coxeter matrix file has no entries");
  CoxeterMatrix matrix = CoxeterMatrix::make(max_index);
  for (const Entry& e : seen) matrix.set(e.s, e.t, e.m);
  return matrix;
}

namespace {

// s s' s s' ... with `count` letters.
Word alternating_word(int first, int second, int count) {
  Word w;
  w.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) w.push_back(k % 2 == 0 ? first : second);
  return w;
}

}  // namespace

Presentation coxeter_braid_presentation(const CoxeterMatrix& matrix) {
  std::vector<std::pair<Word, Word>> relations;
  for (int s = 2; s <= matrix.size; ++s)
    for (int t = 1; t < s; ++t) {
      int m = matrix.at(s, t);
      if (m == kCoxeterInfinity) continue;
      relations.emplace_back(alternating_word(s, t, m),
                             alternating_word(t, s, m));
    }
  return make_presentation(matrix.size, std::move(relations));
}

std::optional<BraidRuleMatch> match_braid_rule_at(const Word& w, int n,
                                                  std::size_t position) {
  const std::size_t len = w.size();
  if (position + 1 >= len) return std::nullopt;
  const int a = w[position];
  const int b = w[position + 1];
  if (a - b >= 2)
    return BraidRuleMatch{position, a, b, 0, 0, BraidRuleFamily::kFarCommutation};
  if (a - b != 1) return std::nullopt;

  const int i = b;  // the factor opens with a_{i+1} a_i
  if (i + 1 > n) return std::nullopt;

  // V is the maximal run of letters below a_i: W must open with a_i and the
  // trailing run with a_{i+1}, so nothing else can absorb these letters.
  std::size_t q = position + 2;
  while (q < len && w[q] < i) ++q;
  const std::size_t v_len = q - position - 2;
  if (q == len) return std::nullopt;

  std::size_t run_start = 0;
  std::size_t w_len = 0;
  int min_w_letter = i;
  if (w[q] == i) {
    // Nonempty W. It cannot contain a_{i+1}, so the trailing run is anchored
    // at the first a_{i+1} to the right, and anything above a_i in between
    // kills the match.
    std::size_t r = q;
    while (r < len && w[r] != i + 1) {
      if (w[r] > i) return std::nullopt;
      min_w_letter = std::min(min_w_letter, w[r]);
      ++r;
    }
    if (r == len) return std::nullopt;
    w_len = r - q;
    run_start = r;
  } else if (w[q] == i + 1) {
    run_start = q;  // W is empty
  } else {
    return std::nullopt;
  }

  // Deepest exact descent a_{i+1} a_i ... available from the anchor; the
  // deeper the run, the smaller j and the longer the factor.
  std::size_t t = 0;
  while (run_start + t + 1 < len && i - static_cast<int>(t) >= 1 &&
         w[run_start + t + 1] == i - static_cast<int>(t))
    ++t;
  int j = std::max(1, i + 1 - static_cast<int>(t));
  if (w_len > 0 && j > min_w_letter) return std::nullopt;  // W must fit [j, i]
  return BraidRuleMatch{position, i, j, v_len, w_len, BraidRuleFamily::kCascade};
}

std::optional<BraidRuleMatch> match_braid_rule(const Word& w, int n) {
  validate_word(w, n);
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos)
    if (auto m = match_braid_rule_at(w, n, pos)) return m;
  return std::nullopt;
}

namespace {

// Writes the right-hand side of the matched rule into `out`.
void build_replacement(const Word& w, const BraidRuleMatch& m, Word& out) {
  if (m.family == BraidRuleFamily::kFarCommutation) {
    out.push_back(m.j);
    out.push_back(m.i);
    return;
  }
  out.push_back(m.i);
  out.push_back(m.i + 1);
  out.push_back(m.i);
  const std::size_t v_begin = m.position + 2;
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(v_begin),
             w.begin() + static_cast<std::ptrdiff_t>(v_begin + m.v_len));
  for (int k = m.i; k >= m.j; --k) out.push_back(k);
  const std::size_t w_begin = v_begin + m.v_len;
  for (std::size_t k = 0; k < m.w_len; ++k) out.push_back(w[w_begin + k] + 1);
}

}  // namespace

Word apply_braid_rule(const Word& w, const BraidRuleMatch& m) {
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
  build_replacement(w, m, out);
  out.insert(out.end(),
             w.begin() + static_cast<std::ptrdiff_t>(m.position + m.factor_length()),
             w.end());
  return out;
}

Word gs_normalize(const Word& w, int n, std::size_t step_budget) {
  validate_word(w, n);
  Word current = w;
  Word replacement;
  std::size_t steps = 0;
  for (;;) {
    std::optional<BraidRuleMatch> m;
    for (std::size_t pos = 0; pos + 1 < current.size(); ++pos)
      if ((m = match_braid_rule_at(current, n, pos))) break;
    if (!m) return current;
    if (++steps > step_budget)
      throw BudgetError("gs_normalize exceeded its step budget of " +
                        std::to_string(step_budget));
    // Both families preserve length, so the rewrite is an in-place overwrite.
    replacement.clear();
    build_replacement(current, *m, replacement);
    std::copy(replacement.begin(), replacement.end(),
              current.begin() + static_cast<std::ptrdiff_t>(m->position));
  }
}

RuleSystem braid_rule_system(int n, std::size_t max_lhs_length) {
  std::vector<std::pair<Word, Word>> rules;

  if (max_lhs_length >= 2)
    for (int s = 3; s <= n; ++s)
      for (int k = 1; k <= s - 2; ++k)
        rules.emplace_back(Word{s, k}, Word{k, s});

  // Cascade family, enumerated as (i, j, V, W) with the lhs length within bound.
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i + 1; ++j) {
      const std::size_t base = 2 + static_cast<std::size_t>(i + 2 - j);
      if (base > max_lhs_length) continue;
      const std::size_t slack = max_lhs_length - base;

      std::vector<Word> v_words;
      std::function<void(Word&)> grow_v = [&](Word& v) {
        v_words.push_back(v);
        if (v.size() == slack) return;
        for (int x = 1; x <= i - 1; ++x) {
          v.push_back(x);
          grow_v(v);
          v.pop_back();
        }
      };
      Word scratch;
      grow_v(scratch);

      for (const Word& v : v_words) {
        const std::size_t w_slack = slack - v.size();
        std::vector<Word> w_words;
        w_words.emplace_back();  // empty W
        if (j <= i && w_slack >= 1) {  // nonempty W needs a nonempty alphabet
          std::function<void(Word&)> grow_w = [&](Word& wseg) {
            w_words.push_back(wseg);
            if (wseg.size() == w_slack) return;
            for (int x = j; x <= i; ++x) {
              wseg.push_back(x);
              grow_w(wseg);
              wseg.pop_back();
            }
          };
          Word head{i};  // W must open with a_i
          grow_w(head);
        }
        for (const Word& wseg : w_words) {
          Word lhs{i + 1, i};
          append_word(lhs, v);
          append_word(lhs, wseg);
          append_word(lhs, descending_run(i + 1, j));
          Word rhs{i, i + 1, i};
          append_word(rhs, v);
          append_word(rhs, descending_run(i, j));
          append_word(rhs, shift_letters(wseg, 1, n));
          rules.emplace_back(std::move(lhs), std::move(rhs));
        }
      }
    }
  }
  return RuleSystem(n, std::move(rules));
}

IdentityReport identity_suite(int n, int exponent_bound) {
  if (n < 2) throw std::invalid_argument("identity_suite requires n >= 2");
  if (exponent_bound < 1)
    throw std::invalid_argument("identity_suite requires a positive bound");
  IdentityReport report;

  auto check = [&](const Word& lhs, const Word& rhs, const std::string& tag) {
    ++report.checked;
    if (gs_normalize(lhs, n) != gs_normalize(rhs, n))
      report.failures.push_back(tag + ": " + format_word(lhs) +
                                " != " + format_word(rhs));
  };

  // a_{i,j-1} a_{i+1,j-1} = a_{i+1,j-1} a_{i+1,j}
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 2; j <= i + 1; ++j) {
      Word lhs = concat(descending_run(i, j - 1), descending_run(i + 1, j - 1));
      Word rhs = concat(descending_run(i + 1, j - 1), descending_run(i + 1, j));
      check(lhs, rhs,
            "run i=" + std::to_string(i) + " j=" + std::to_string(j));
    }

  // Powered variant: a_{i,j-1}(p) a_{i+1,j-1} = a_{i+1,j-1} a_{i+1,j}(p).
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 2; j <= i + 1; ++j) {
      const int arity = i - j + 2;
      std::vector<int> p(static_cast<std::size_t>(arity), 1);
      for (;;) {
        Word lhs = concat(powered_run(i, j - 1, p), descending_run(i + 1, j - 1));
        Word rhs = concat(descending_run(i + 1, j - 1), powered_run(i + 1, j, p));
        check(lhs, rhs,
              "powered run i=" + std::to_string(i) + " j=" + std::to_string(j));
        int k = arity - 1;
        while (k >= 0 && p[static_cast<std::size_t>(k)] == exponent_bound) {
          p[static_cast<std::size_t>(k)] = 1;
          --k;
        }
        if (k < 0) break;
        ++p[static_cast<std::size_t>(k)];
      }
    }

  // a_s a_{i+1,j} = a_{i+1,j} a_{s+1} for j <= s <= i.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      for (int s = j; s <= i; ++s) {
        Word lhs = concat(Word{s}, descending_run(i + 1, j));
        Word rhs = concat(descending_run(i + 1, j), Word{s + 1});
        check(lhs, rhs,
              "shuffle i=" + std::to_string(i) + " j=" + std::to_string(j) +
                  " s=" + std::to_string(s));
      }

  return report;
}

}  // namespace gsbraid
