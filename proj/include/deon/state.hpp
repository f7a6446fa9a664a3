#pragma once

// Deontic states and the ordering primitives.
//
// A state is <W, W*, <=I, <=N, V> over the full valuation space of the
// vocabulary: W and V are implicit in the world indexing, W* is the
// deliberation subset, <=I the ideality relation (reflexive, not
// necessarily transitive or total) and <=N the normality relation (a
// total preorder). In both relations a pair (a, b) reads "a is at least
// as ideal/normal as b" — lower is better, minimal elements are the most
// normal worlds.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/worlds.hpp"

namespace deon {

struct DeonticState {
  std::shared_ptr<const Vocabulary> vocab;
  WorldSet wstar;
  Relation ideality;
  Relation normality;

  std::size_t world_count() const noexcept { return vocab->world_count(); }
};

// The minimal state: everything deliberable, all worlds equally ideal and
// equally normal.
inline DeonticState minimal_state(std::shared_ptr<const Vocabulary> vocab) {
  std::size_t n = vocab->world_count();
  return {std::move(vocab), WorldSet::all(n), Relation::universal(n), Relation::universal(n)};
}

// The absurd state: like the minimal state but with an empty deliberation
// subset. It absorbs every update.
inline DeonticState absurd_state(std::shared_ptr<const Vocabulary> vocab) {
  std::size_t n = vocab->world_count();
  return {std::move(vocab), WorldSet(n), Relation::universal(n), Relation::universal(n)};
}

inline bool is_absurd(const DeonticState& s) {
  std::size_t n = s.world_count();
  return s.wstar.empty() && s.ideality == Relation::universal(n) &&
         s.normality == Relation::universal(n);
}

// Componentwise equality of (wstar, ideality, normality) over a shared
// vocabulary.
inline bool states_equal(const DeonticState& a, const DeonticState& b) {
  if (a.vocab != b.vocab && !(*a.vocab == *b.vocab))
    throw VocabMismatchError("states compared over different vocabularies");
  return a.wstar == b.wstar && a.ideality == b.ideality && a.normality == b.normality;
}

// Minimal elements of `rel` restricted to `candidates`: members with no
// strictly dominating member among the candidates.
inline WorldSet minimal_under(const Relation& rel, const WorldSet& candidates) {
  WorldSet out(candidates.world_count());
  auto cand = candidates.indices();
  for (std::uint32_t w : cand) {
    bool dominated = false;
    for (std::uint32_t v : cand) {
      if (rel.contains(v, w) && !rel.contains(w, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.set(w);
  }
  return out;
}

// The most normal worlds among `candidates` under the state's normality
// ordering. Empty only for empty candidates (W is finite).
inline WorldSet most_normal(const DeonticState& s, const WorldSet& candidates) {
  return minimal_under(s.normality, candidates);
}

// The smallest superset of `rel` that is transitively closed over chains
// lying inside `scope`; pairs outside scope x scope are exactly those of
// `rel`.
inline Relation closure_within(const Relation& rel, const WorldSet& scope) {
  Relation out = rel;
  auto members = scope.indices();
  std::vector<WorldSet> restricted(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    restricted[i] = rel.row(members[i]) & scope;
  // Floyd-Warshall reachability over the scope members.
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::size_t i = 0; i < members.size(); ++i)
      if (restricted[i].test(members[k])) restricted[i] |= restricted[k];
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::uint32_t b : restricted[i].indices()) out.add(members[i], b);
  return out;
}

namespace detail {

// The shared pref machinery: W1 are the most normal violating
// (not-alpha and beta) worlds, W2 the most normal complying (alpha and
// beta) worlds, both drawn from `domain`; the test succeeds when every
// W1 world is dominated by some W2 world that no W1 world reaches under
// the closure of the ideality relation within W1 v W2.
inline bool pref_over(const DeonticState& s, const Prop& beta, const Prop& alpha,
                      const WorldSet& domain) {
  std::size_t n = s.world_count();
  WorldSet beta_worlds = satisfying_set(beta, n) & domain;
  WorldSet alpha_worlds = satisfying_set(alpha, n);
  WorldSet violating = beta_worlds;
  violating.subtract(alpha_worlds);
  WorldSet complying = beta_worlds & alpha_worlds;

  WorldSet w1 = minimal_under(s.normality, violating);
  if (w1.empty()) return true;
  WorldSet w2 = minimal_under(s.normality, complying);
  if (w2.empty()) return false;

  Relation leq = closure_within(s.ideality, w1 | w2);
  for (std::uint32_t v : w1.indices()) {
    bool witnessed = false;
    for (std::uint32_t c : w2.indices()) {
      if (!leq.contains(c, v)) continue;
      bool beaten = false;
      for (std::uint32_t v2 : w1.indices()) {
        if (leq.contains(v2, c)) {
          beaten = true;
          break;
        }
      }
      if (!beaten) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace detail

// pref(s, beta) = alpha over the full world set.
inline bool pref(const DeonticState& s, const Prop& beta, const Prop& alpha) {
  return detail::pref_over(s, beta, alpha, WorldSet::all(s.world_count()));
}

// As pref, but with the worlds restricted to the deliberation subset W*.
inline bool pref_star(const DeonticState& s, const Prop& beta, const Prop& alpha) {
  return detail::pref_over(s, beta, alpha, s.wstar);
}

// ── Canonical serialization ─────────────────────────────────────────────

// Deterministic key for memo tables: the raw bit blocks of wstar and both
// relations, in world order.
struct StateKey {
  std::vector<std::uint64_t> words;

  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint64_t w : k.words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline StateKey state_key(const DeonticState& s) {
  StateKey key;
  std::size_t n = s.world_count();
  std::size_t words_per_set = (n + 63) / 64;
  key.words.reserve(words_per_set * (1 + 2 * n));
  auto append = [&key](const WorldSet& ws) {
    for (std::uint64_t w : ws.words()) key.words.push_back(w);
  };
  append(s.wstar);
  for (std::uint32_t w = 0; w < n; ++w) append(s.ideality.row(w));
  for (std::uint32_t w = 0; w < n; ++w) append(s.normality.row(w));
  return key;
}

}  // namespace deon
