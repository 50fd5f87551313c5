#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsbraid/braid.hpp"
#include "gsbraid/completion.hpp"
#include "test_util.hpp"

using namespace gsbraid;
using testutil::all_words;
using testutil::random_word;

namespace {

std::set<std::pair<Word, Word>> relation_set(const Presentation& p) {
  return {p.relations.begin(), p.relations.end()};
}

bool matches_full_extent_at_zero(const Word& w, int n) {
  auto m = match_braid_rule_at(w, n, 0);
  return m && m->factor_length() == w.size();
}

// A leading word is minimal if no proper factor is itself a leading word.
bool is_minimal_leading_word(const Word& w, int n) {
  if (!matches_full_extent_at_zero(w, n)) return false;
  for (std::size_t start = 0; start < w.size(); ++start)
    for (std::size_t len = 2; len < w.size() - (start > 0 ? start - 1 : 0);
         ++len) {
      if (start == 0 && len == w.size()) continue;
      if (start + len > w.size()) break;
      Word factor(w.begin() + static_cast<std::ptrdiff_t>(start),
                  w.begin() + static_cast<std::ptrdiff_t>(start + len));
      if (matches_full_extent_at_zero(factor, n)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("artin presentations") {
  Presentation b3 = artin_presentation(2);
  CHECK(b3.n_generators == 2);
  REQUIRE(b3.relations.size() == 1);
  CHECK(b3.relations[0] == std::pair<Word, Word>{{2, 1, 2}, {1, 2, 1}});

  Presentation b4 = artin_presentation(3);
  CHECK(relation_set(b4) ==
        std::set<std::pair<Word, Word>>{{{2, 1, 2}, {1, 2, 1}},
                                        {{3, 2, 3}, {2, 3, 2}},
                                        {{3, 1}, {1, 3}}});
  CHECK(b4.degree_preserving);

  Presentation free1 = artin_presentation(1);
  CHECK(free1.relations.empty());
}

TEST_CASE("bkl presentations") {
  Presentation b3 = bkl_presentation(3);
  CHECK(b3.n_generators == 3);
  // The single chain 3 > 2 > 1: a_32 a_21 = a_31 a_32 = a_21 a_31, with
  // generator indices a_21 -> 1, a_31 -> 2, a_32 -> 3.
  CHECK(relation_set(b3) == std::set<std::pair<Word, Word>>{
                                {{3, 1}, {2, 3}},
                                {{2, 3}, {1, 2}},
                            });

  Presentation b2 = bkl_presentation(2);
  CHECK(b2.n_generators == 1);
  CHECK(b2.relations.empty());

  // Relation count for 4 strands: chains give 2 per ordered triple; the
  // commutations are counted here by brute force over strand quadruples.
  Presentation b4 = bkl_presentation(4);
  CHECK(b4.n_generators == 6);
  int chains = 0;
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y < x; ++y)
      for (int z = 1; z < y; ++z) ++chains;
  int commuting_pairs = 0;
  std::vector<std::pair<int, int>> strand_pairs;
  for (int s = 2; s <= 4; ++s)
    for (int t = 1; t < s; ++t) strand_pairs.emplace_back(t, s);
  for (std::size_t p = 0; p < strand_pairs.size(); ++p)
    for (std::size_t q = p + 1; q < strand_pairs.size(); ++q) {
      auto [t1, s1] = strand_pairs[p];
      auto [t2, s2] = strand_pairs[q];
      long long sign = static_cast<long long>(t1 - t2) * (t1 - s2) *
                       (s1 - t2) * (s1 - s2);
      if (sign > 0) ++commuting_pairs;
    }
  CHECK(b4.relations.size() ==
        static_cast<std::size_t>(chains * 2 + commuting_pairs));
  // Every relation is sound for the presented monoid.
  for (const auto& [lhs, rhs] : b4.relations)
    CHECK(oracle_equal(lhs, rhs, b4));
}

TEST_CASE("coxeter braid presentations") {
  CoxeterMatrix m = CoxeterMatrix::make(2);
  m.set(1, 2, 3);
  Presentation p3 = coxeter_braid_presentation(m);
  REQUIRE(p3.relations.size() == 1);
  CHECK(p3.relations[0] == std::pair<Word, Word>{{2, 1, 2}, {1, 2, 1}});

  m.set(1, 2, 2);
  Presentation p2 = coxeter_braid_presentation(m);
  REQUIRE(p2.relations.size() == 1);
  CHECK(p2.relations[0] == std::pair<Word, Word>{{2, 1}, {1, 2}});

  m.set(1, 2, kCoxeterInfinity);
  CHECK(coxeter_braid_presentation(m).relations.empty());

  // The type-A matrix reproduces the Artin presentation.
  for (int n = 2; n <= 5; ++n) {
    CoxeterMatrix a = CoxeterMatrix::make(n);
    for (int s = 2; s <= n; ++s)
      for (int t = 1; t < s; ++t) a.set(s, t, s - t == 1 ? 3 : 2);
    CHECK(relation_set(coxeter_braid_presentation(a)) ==
          relation_set(artin_presentation(n)));
  }
}

TEST_CASE("coxeter matrix file parsing") {
  CoxeterMatrix m = parse_coxeter_matrix("# B2\nm 1 2 4\nm 1 3 inf\nm 2 3 2\n");
  CHECK(m.size == 3);
  CHECK(m.at(2, 1) == 4);
  CHECK(m.at(1, 3) == kCoxeterInfinity);
  CHECK(m.at(3, 2) == 2);
  CHECK_THROWS_AS(parse_coxeter_matrix("m 1 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("x 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_coxeter_matrix("m 1 2 1\n"), ParseError);
}

TEST_CASE("braid rule matcher: examples") {
  // Braid relation: V and W empty, j = i+1.
  auto braid = match_braid_rule({2, 1, 2}, 2);
  REQUIRE(braid.has_value());
  CHECK(braid->family == BraidRuleFamily::kCascade);
  CHECK(braid->position == 0);
  CHECK(braid->i == 1);
  CHECK(braid->j == 2);
  CHECK(braid->v_len == 0);
  CHECK(braid->w_len == 0);
  CHECK(braid->factor_length() == 3);

  // a_2 a_1^3 a_2 a_1: W = a_1^2, j = i = 1.
  auto powered = match_braid_rule({2, 1, 1, 1, 2, 1}, 2);
  REQUIRE(powered.has_value());
  CHECK(powered->i == 1);
  CHECK(powered->j == 1);
  CHECK(powered->v_len == 0);
  CHECK(powered->w_len == 2);
  CHECK(powered->factor_length() == 6);

  // The reduced side of a_2 a_1^2 a_2 a_1 -> a_1 a_2 a_1^2 a_2 is
  // irreducible: every factor misses both families.
  Word nf{1, 2, 1, 1, 2};
  CHECK_FALSE(match_braid_rule(nf, 2).has_value());
  for (std::size_t start = 0; start < nf.size(); ++start)
    for (std::size_t len = 1; start + len <= nf.size(); ++len) {
      Word factor(nf.begin() + static_cast<std::ptrdiff_t>(start),
                  nf.begin() + static_cast<std::ptrdiff_t>(start + len));
      CHECK_FALSE(matches_full_extent_at_zero(factor, 2));
    }

  // Far commutation.
  auto commute = match_braid_rule({3, 1}, 3);
  REQUIRE(commute.has_value());
  CHECK(commute->family == BraidRuleFamily::kFarCommutation);
  CHECK(commute->i == 3);
  CHECK(commute->j == 1);

  // Leftmost position wins.
  auto leftmost = match_braid_rule({1, 2, 1, 2, 4, 1}, 4);
  REQUIRE(leftmost.has_value());
  CHECK(leftmost->position == 1);
}

TEST_CASE("braid rule matcher: apply") {
  auto braid = match_braid_rule({2, 1, 2}, 2);
  REQUIRE(braid.has_value());
  CHECK(apply_braid_rule({2, 1, 2}, *braid) == Word{1, 2, 1});

  Word family_word{2, 1, 1, 2, 1};
  auto m5 = match_braid_rule(family_word, 2);
  REQUIRE(m5.has_value());
  CHECK(apply_braid_rule(family_word, *m5) == Word{1, 2, 1, 1, 2});

  auto mc = match_braid_rule({3, 1}, 3);
  REQUIRE(mc.has_value());
  CHECK(apply_braid_rule({3, 1}, *mc) == Word{1, 3});

  // Applying any match strictly decreases deg-lex and preserves length.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w = random_word(rng, 4, 10);
    if (auto m = match_braid_rule(w, 4)) {
      Word next = apply_braid_rule(w, *m);
      CHECK(next.size() == w.size());
      CHECK(deglex_compare(w, next) == std::strong_ordering::greater);
    }
  }
}

TEST_CASE("gs_normalize basics") {
  CHECK(gs_normalize({2, 1, 2, 1, 2}, 2) == Word{1, 2, 1, 1, 2});
  CHECK(gs_normalize({}, 2) == Word{});
  CHECK(gs_normalize({2, 1, 1, 2, 1}, 2) == Word{1, 2, 1, 1, 2});
  CHECK(gs_normalize({3, 1}, 3) == Word{1, 3});

  // Delta is already reduced: it is the least element of its class.
  Presentation artin3 = artin_presentation(3);
  Word delta = delta_word(3);
  CHECK(gs_normalize(delta, 3) == delta);
  Word least = delta;
  for (const Word& w : bfs_class(delta, artin3))
    if (deglex_compare(w, least) == std::strong_ordering::less) least = w;
  CHECK(least == delta);

  // Degree preservation.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(rng, 4, 12);
    CHECK(gs_normalize(w, 4).size() == w.size());
  }
}

TEST_CASE("gs_normalize agrees with the BFS oracle") {
  // Soundness and completeness on an exhaustive small range: equal normal
  // forms exactly when the words are connected by the relations.
  Presentation artin3 = artin_presentation(3);
  auto words = all_words(3, 5);
  std::vector<Word> normal(words.size());
  for (std::size_t k = 0; k < words.size(); ++k)
    normal[k] = gs_normalize(words[k], 3);
  for (std::size_t a = 0; a < words.size(); ++a) {
    WordSet cls = bfs_class(words[a], artin3);
    for (std::size_t b = a; b < words.size(); ++b) {
      bool oracle = words[a].size() == words[b].size() &&
                    cls.count(words[b]) > 0;
      CHECK(oracle == (normal[a] == normal[b]));
    }
  }
}

TEST_CASE("gs_normalize agrees with bounded completion") {
  for (int n : {2, 3, 4}) {
    CompletionConfig cfg;
    cfg.max_word_length = 10;
    CompletionReport report = complete(artin_presentation(n), cfg);
    REQUIRE(report.status == CompletionStatus::kSaturatedUpToBound);
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 10000; ++trial) {
      Word w = random_word(rng, n, 10);
      CHECK(gs_normalize(w, n) == normal_form(w, report.rules));
    }
  }
}

TEST_CASE("leading words of completion match the rule families") {
  for (int n : {2, 3}) {
    CompletionConfig cfg;
    cfg.max_word_length = 8;
    RuleSystem completed =
        interreduce(complete(artin_presentation(n), cfg).rules);
    std::set<Word> completed_lhs;
    for (const Rule& r : completed.rules()) completed_lhs.insert(r.lhs);

    std::set<Word> matched;
    for (const Word& w : all_words(n, 8))
      if (is_minimal_leading_word(w, n)) matched.insert(w);
    CHECK(completed_lhs == matched);
  }
}

TEST_CASE("braid_rule_system materializes both families") {
  RuleSystem b3 = braid_rule_system(2, 12);
  // n = 2: the braid rule, the redundant j=1 W=empty instance, and the
  // Eq-(5) family for 2 <= l <= 9.
  CHECK(b3.size() == 10);
  for (const Rule& r : b3.rules()) {
    auto m = match_braid_rule_at(r.lhs, 2, 0);
    REQUIRE(m.has_value());
    CHECK(m->factor_length() == r.lhs.size());
    CHECK(apply_braid_rule(r.lhs, *m) == r.rhs);
  }

  RuleSystem b5 = braid_rule_system(4, 7);
  for (const Rule& r : b5.rules()) {
    CHECK(r.lhs.size() <= 7);
    auto m = match_braid_rule_at(r.lhs, 4, 0);
    REQUIRE(m.has_value());
    CHECK(m->factor_length() == r.lhs.size());
    CHECK(apply_braid_rule(r.lhs, *m) == r.rhs);
    CHECK(deglex_compare(r.lhs, r.rhs) == std::strong_ordering::greater);
  }
}

TEST_CASE("identity suite holds at small scale") {
  IdentityReport report = identity_suite(3, 2);
  CHECK(report.checked > 0);
  CHECK(report.failures.empty());

  // Concrete instances: a_21 a_31 = a_31 a_32, and a_1 D_2 = D_2 a_2.
  CHECK(gs_normalize(concat({2, 1}, {3, 2, 1}), 3) ==
        gs_normalize(concat({3, 2, 1}, {3, 2}), 3));
  CHECK(gs_normalize(concat({1}, {2, 1}), 2) ==
        gs_normalize(concat({2, 1}, {2}), 2));
}
