#include "gsbraid/completion.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

namespace gsbraid {

namespace {

// Emits every ambiguity of the ordered pair (f, g) whose word fits the
// bound. Intersections take a proper suffix of lhs(f) equal to a proper
// prefix of lhs(g); full containment of one lhs in the other is an
// inclusion, with the identity self-inclusion skipped.
template <typename Emit>
void for_each_pair_ambiguity(const Rule& f, const Rule& g,
                             std::size_t max_word_length, Emit emit) {
  const Word& fl = f.lhs;
  const Word& gl = g.lhs;
  const std::size_t min_len = std::min(fl.size(), gl.size());
  for (std::size_t t = 1; t < min_len; ++t) {
    const std::size_t w_len = fl.size() + gl.size() - t;
    if (w_len > max_word_length) continue;
    if (std::equal(fl.end() - static_cast<std::ptrdiff_t>(t), fl.end(),
                   gl.begin()))
      emit(AmbiguityKind::kIntersection, fl.size() - t, w_len);
  }
  if (gl.size() <= fl.size() && fl.size() <= max_word_length) {
    for (std::size_t off = 0; off + gl.size() <= fl.size(); ++off) {
      if (f.id == g.id && off == 0 && gl.size() == fl.size()) continue;
      if (std::equal(gl.begin(), gl.end(),
                     fl.begin() + static_cast<std::ptrdiff_t>(off)))
        emit(AmbiguityKind::kInclusion, off, fl.size());
    }
  }
}

Ambiguity materialize_ambiguity(const Rule& f, const Rule& g,
                                AmbiguityKind kind, std::size_t offset) {
  Ambiguity amb;
  amb.kind = kind;
  amb.f_id = f.id;
  amb.g_id = g.id;
  amb.a.assign(f.lhs.begin(), f.lhs.begin() + static_cast<std::ptrdiff_t>(offset));
  if (kind == AmbiguityKind::kIntersection) {
    const std::size_t t = f.lhs.size() - offset;  // overlap length
    amb.b.assign(g.lhs.begin() + static_cast<std::ptrdiff_t>(t), g.lhs.end());
    amb.w = concat(f.lhs, amb.b);
  } else {
    amb.b.assign(f.lhs.begin() + static_cast<std::ptrdiff_t>(offset + g.lhs.size()),
                 f.lhs.end());
    amb.w = f.lhs;
  }
  return amb;
}

}  // namespace

std::vector<Ambiguity> find_ambiguities(const RuleSystem& rules) {
  return find_ambiguities(rules, static_cast<std::size_t>(-1));
}

std::vector<Ambiguity> find_ambiguities(const RuleSystem& rules,
                                        std::size_t max_word_length) {
  std::vector<Ambiguity> out;
  for (const Rule& f : rules.rules())
    for (const Rule& g : rules.rules())
      for_each_pair_ambiguity(
          f, g, max_word_length,
          [&](AmbiguityKind kind, std::size_t offset, std::size_t) {
            out.push_back(materialize_ambiguity(f, g, kind, offset));
          });
  return out;
}

std::pair<Word, Word> composition(const Rule& f, const Rule& g,
                                  const Ambiguity& amb) {
  if (amb.kind == AmbiguityKind::kIntersection)
    return {concat(f.rhs, amb.b), concat(amb.a, g.rhs)};
  return {f.rhs, concat(concat(amb.a, g.rhs), amb.b)};
}

std::optional<std::pair<Word, Word>> process_composition(
    const Word& p, const Word& q, const RuleSystem& rules) {
  Word np = normal_form(p, rules);
  Word nq = normal_form(q, rules);
  if (np == nq) return std::nullopt;
  if (deglex_compare(np, nq) == std::strong_ordering::greater)
    return std::make_pair(std::move(np), std::move(nq));
  return std::make_pair(std::move(nq), std::move(np));
}

std::string_view to_string(CompletionStatus status) {
  switch (status) {
    case CompletionStatus::kSaturatedUpToBound:
      return "SaturatedUpToBound";
    case CompletionStatus::kRuleBudgetExhausted:
      return "RuleBudgetExhausted";
    case CompletionStatus::kAmbiguityBudgetExhausted:
      return "AmbiguityBudgetExhausted";
  }
  return "unknown";
}

namespace {

struct PendingAmbiguity {
  std::uint32_t w_len = 0;
  std::uint64_t seq = 0;  // FIFO within a length class
  int f_id = 0;
  int g_id = 0;
  AmbiguityKind kind = AmbiguityKind::kIntersection;
  std::uint32_t offset = 0;
};

struct PendingOrder {
  bool operator()(const PendingAmbiguity& x, const PendingAmbiguity& y) const {
    if (x.w_len != y.w_len) return x.w_len > y.w_len;  // min-heap by length
    return x.seq > y.seq;
  }
};

}  // namespace

CompletionReport complete(const Presentation& p, const CompletionConfig& cfg) {
  std::size_t discarded = 0;
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& [u, v] : p.relations) {
    auto cmp = deglex_compare(u, v);
    if (cmp == std::strong_ordering::equal) continue;  // trivial relation
    Word lhs = cmp == std::strong_ordering::greater ? u : v;
    Word rhs = cmp == std::strong_ordering::greater ? v : u;
    if (lhs.size() > cfg.max_word_length) {
      ++discarded;
      continue;
    }
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(lhs, rhs)) ==
        pairs.end())
      pairs.emplace_back(std::move(lhs), std::move(rhs));
  }

  RuleSystem rules(p.n_generators, pairs);
  std::priority_queue<PendingAmbiguity, std::vector<PendingAmbiguity>,
                      PendingOrder>
      queue;
  std::uint64_t seq = 0;
  std::size_t enqueued_total = 0;
  bool ambiguity_budget_hit = false;

  // Every ordered pair involving the new rule, the self-pair once.
  auto enqueue_for = [&](int new_id) {
    for (int other = 0; other <= new_id; ++other) {
      const Rule& nr = rules.rule(new_id);
      const Rule& or_ = rules.rule(other);
      auto push = [&](const Rule& f, const Rule& g) {
        for_each_pair_ambiguity(
            f, g, cfg.max_word_length,
            [&](AmbiguityKind kind, std::size_t offset, std::size_t w_len) {
              if (enqueued_total >= cfg.max_ambiguities) {
                ambiguity_budget_hit = true;
                return;
              }
              ++enqueued_total;
              queue.push(PendingAmbiguity{static_cast<std::uint32_t>(w_len),
                                          seq++, f.id, g.id, kind,
                                          static_cast<std::uint32_t>(offset)});
            });
      };
      push(nr, or_);
      if (other != new_id) push(or_, nr);
    }
  };

  for (std::size_t id = 0; id < rules.size(); ++id)
    enqueue_for(static_cast<int>(id));

  auto make_report = [&](CompletionStatus status) {
    return CompletionReport{status, rules, discarded, p.degree_preserving};
  };

  while (!queue.empty()) {
    if (ambiguity_budget_hit)
      return make_report(CompletionStatus::kAmbiguityBudgetExhausted);
    PendingAmbiguity pending = queue.top();
    queue.pop();
    const Rule& f = rules.rule(pending.f_id);
    const Rule& g = rules.rule(pending.g_id);
    Ambiguity amb = materialize_ambiguity(f, g, pending.kind, pending.offset);
    auto [comp_p, comp_q] = composition(f, g, amb);
    auto oriented = process_composition(comp_p, comp_q, rules);
    if (!oriented) continue;
    if (oriented->first.size() > cfg.max_word_length) {
      // In-bound ambiguities cannot reach this: both composition sides have
      // length <= |w| and reduction never lengthens a word.
      ++discarded;
      continue;
    }
    if (rules.size() >= cfg.max_rules)
      return make_report(CompletionStatus::kRuleBudgetExhausted);
    pairs.push_back(*oriented);
    rules = RuleSystem(p.n_generators, pairs);
    enqueue_for(static_cast<int>(rules.size()) - 1);
  }
  if (ambiguity_budget_hit)
    return make_report(CompletionStatus::kAmbiguityBudgetExhausted);
  return make_report(CompletionStatus::kSaturatedUpToBound);
}

RuleSystem interreduce(const RuleSystem& rules) {
  std::vector<std::pair<Word, Word>> pairs;
  pairs.reserve(rules.size());
  for (const Rule& r : rules.rules()) pairs.emplace_back(r.lhs, r.rhs);

  const int n = rules.n_generators();
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop rules whose lhs the others already rewrite. Removing a rule never
    // makes another lhs reducible, so one forward pass suffices.
    for (std::size_t k = 0; k < pairs.size();) {
      std::vector<std::pair<Word, Word>> others;
      others.reserve(pairs.size() - 1);
      for (std::size_t m = 0; m < pairs.size(); ++m)
        if (m != k) others.push_back(pairs[m]);
      if (others.empty()) break;
      RuleSystem rest(n, others);
      if (!is_reduced(pairs[k].first, rest)) {
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
      } else {
        ++k;
      }
    }
    // Renormalize right-hand sides by the full remaining set.
    RuleSystem current(n, pairs);
    for (auto& [lhs, rhs] : pairs) {
      Word reduced = normal_form(rhs, current);
      if (reduced != rhs) {
        rhs = std::move(reduced);
        changed = true;
      }
    }
  }
  return RuleSystem(n, std::move(pairs));
}

VerifyReport verify_gs_up_to(const RuleSystem& rules,
                             std::size_t max_word_length) {
  VerifyReport report;
  for (const Rule& f : rules.rules())
    for (const Rule& g : rules.rules())
      for_each_pair_ambiguity(
          f, g, max_word_length,
          [&](AmbiguityKind kind, std::size_t offset, std::size_t) {
            Ambiguity amb = materialize_ambiguity(f, g, kind, offset);
            auto [p, q] = composition(f, g, amb);
            ++report.ambiguities_checked;
            Word np = normal_form(p, rules);
            Word nq = normal_form(q, rules);
            if (np != nq)
              report.violations.push_back(
                  GsViolation{std::move(amb), std::move(np), std::move(nq)});
          });
  return report;
}

namespace {

std::string encode(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(static_cast<char>(x));
  return s;
}

Word decode(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(static_cast<Letter>(c));
  return w;
}

// Both directions of every relation, encoded once per run.
std::vector<std::pair<std::string, std::string>> encoded_moves(
    const Presentation& p) {
  std::vector<std::pair<std::string, std::string>> moves;
  moves.reserve(2 * p.relations.size());
  for (const auto& [u, v] : p.relations) {
    if (u == v) continue;
    moves.emplace_back(encode(u), encode(v));
    moves.emplace_back(encode(v), encode(u));
  }
  return moves;
}

template <typename Found>
WordSet bfs_run(const Word& w, const Presentation& p, std::size_t cap,
                Found found) {
  if (!p.degree_preserving)
    throw NonDegreePreservingError(
        "the BFS oracle requires a degree-preserving presentation");
  validate_word(w, p.n_generators);
  const auto moves = encoded_moves(p);
  std::unordered_set<std::string> visited;
  std::deque<std::string> frontier;
  std::string start = encode(w);
  visited.insert(start);
  if (found(start)) return {};
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    std::string state = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& [from, to] : moves) {
      if (from.size() > state.size()) continue;
      for (std::size_t pos = 0; pos + from.size() <= state.size(); ++pos) {
        if (state.compare(pos, from.size(), from) != 0) continue;
        std::string next = state;
        next.replace(pos, from.size(), to);
        if (!visited.insert(next).second) continue;
        if (visited.size() > cap)
          throw CapExceededError("bfs_class exceeded its state cap of " +
                                 std::to_string(cap));
        if (found(next)) return {};
        frontier.push_back(std::move(next));
      }
    }
  }
  WordSet out;
  out.reserve(visited.size());
  for (const std::string& s : visited) out.insert(decode(s));
  return out;
}

}  // namespace

WordSet bfs_class(const Word& w, const Presentation& p, std::size_t cap) {
  return bfs_run(w, p, cap, [](const std::string&) { return false; });
}

bool oracle_equal(const Word& u, const Word& v, const Presentation& p,
                  std::size_t cap) {
  if (u.size() != v.size()) return false;
  const std::string target = encode(v);
  bool hit = false;
  bfs_run(u, p, cap, [&](const std::string& state) {
    if (state == target) hit = true;
    return hit;
  });
  return hit;
}

std::string format_completion_report(const CompletionReport& report) {
  std::string out = "status ";
  out += to_string(report.status);
  out += " rules ";
  out += std::to_string(report.rules.size());
  out += " discarded ";
  out += std::to_string(report.discarded_over_length);
  out += '\n';
  std::vector<const Rule*> sorted;
  sorted.reserve(report.rules.size());
  for (const Rule& r : report.rules.rules()) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const Rule* x, const Rule* y) {
    return deglex_compare(x->lhs, y->lhs) == std::strong_ordering::less;
  });
  for (const Rule* r : sorted) {
    out += "rule: ";
    out += format_word(r->lhs);
    out += " -> ";
    out += format_word(r->rhs);
    out += '\n';
  }
  return out;
}

}  // namespace gsbraid
