#pragma once

// The two validity relations over premise lists.
//
// Order-sensitive validity folds the premises over the minimal state and
// tests acceptance of the conclusion. Nonmonotonic validity quantifies
// over all premise permutations whose final state accepts every premise;
// the conclusion must be accepted in each of them. When no permutation
// qualifies the premises are jointly unacceptable and every conclusion
// holds vacuously.
//
// The permutation search walks the prefix tree of orders with all update
// results memoized on (state, sentence); orders reaching the absurd state
// are enumerated like any other, since the absurd state accepts every
// sentence and such orders qualify formally.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/state.hpp"
#include "deon/update.hpp"

namespace deon {

// Permutation budget: n premises mean n! folds, so keep n at desk scale.
inline constexpr std::size_t kDefaultMaxPremises = 9;

struct EntailmentReport {
  bool verdict = true;
  // True when no premise order qualifies; the verdict is then vacuously
  // true for every conclusion.
  bool vacuous = false;
  // Qualifying permutations in lexicographic order, as 0-based index
  // sequences into the premise list.
  std::vector<std::vector<std::size_t>> qualifying_orders;
  // Conclusion verdict of each qualifying order, parallel to
  // qualifying_orders.
  std::vector<bool> conclusion_verdicts;
};

inline bool entails_ordered(std::span<const Sentence> premises, const Sentence& conclusion,
                            std::shared_ptr<const Vocabulary> vocab) {
  DeonticState s = minimal_state(std::move(vocab));
  for (const Sentence& p : premises) s = update(s, p);
  return accepts(s, conclusion);
}

namespace detail {

// Interned states plus memoized update edges, shared across the whole
// prefix tree of a permutation search.
class UpdateMemo {
 public:
  UpdateMemo(std::span<const Sentence> premises, const Sentence& conclusion)
      : premises_(premises), conclusion_(conclusion) {}

  std::size_t intern(DeonticState s) {
    StateKey key = state_key(s);
    auto [it, inserted] = ids_.try_emplace(std::move(key), states_.size());
    if (inserted) states_.push_back(std::move(s));
    return it->second;
  }

  // Slot i < n applies premises[i]; slot n applies the conclusion.
  std::size_t step(std::size_t state_id, std::size_t slot) {
    std::uint64_t key = state_id * (premises_.size() + 1) + slot;
    auto it = edges_.find(key);
    if (it != edges_.end()) return it->second;
    const Sentence& phi = slot < premises_.size() ? premises_[slot] : conclusion_;
    std::size_t next = intern(update(states_[state_id], phi));
    edges_.emplace(key, next);
    return next;
  }

  // Acceptance via interning: the update is the identity exactly when the
  // edge loops back to the same canonical state.
  bool accepts_premise(std::size_t state_id, std::size_t i) { return step(state_id, i) == state_id; }
  bool accepts_conclusion(std::size_t state_id) {
    return step(state_id, premises_.size()) == state_id;
  }

 private:
  std::span<const Sentence> premises_;
  const Sentence& conclusion_;
  std::vector<DeonticState> states_;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> ids_;
  std::unordered_map<std::uint64_t, std::size_t> edges_;
};

}  // namespace detail

inline EntailmentReport entails(std::span<const Sentence> premises, const Sentence& conclusion,
                                std::shared_ptr<const Vocabulary> vocab,
                                std::size_t max_premises = kDefaultMaxPremises) {
  if (premises.size() > max_premises)
    throw PremiseLimitError("premise list of " + std::to_string(premises.size()) +
                            " exceeds the cap of " + std::to_string(max_premises));

  const std::size_t n = premises.size();
  detail::UpdateMemo memo(premises, conclusion);
  std::size_t root = memo.intern(minimal_state(std::move(vocab)));

  EntailmentReport report;
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> used(n, false);

  auto dfs = [&](auto&& self, std::size_t state_id) -> void {
    if (order.size() == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (!memo.accepts_premise(state_id, i)) return;
      report.qualifying_orders.push_back(order);
      report.conclusion_verdicts.push_back(memo.accepts_conclusion(state_id));
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      order.push_back(i);
      self(self, memo.step(state_id, i));
      order.pop_back();
      used[i] = false;
    }
  };
  dfs(dfs, root);

  report.vacuous = report.qualifying_orders.empty();
  report.verdict = true;
  for (bool ok : report.conclusion_verdicts)
    if (!ok) report.verdict = false;
  return report;
}

// The permutations whose folded final state accepts every premise, in
// lexicographic order.
inline std::vector<std::vector<std::size_t>> qualifying_orders(
    std::span<const Sentence> premises, std::shared_ptr<const Vocabulary> vocab,
    std::size_t max_premises = kDefaultMaxPremises) {
  return entails(premises, Sentence::fact(Prop::top()), std::move(vocab), max_premises)
      .qualifying_orders;
}

}  // namespace deon
