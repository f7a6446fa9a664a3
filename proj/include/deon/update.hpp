#pragma once

// Update operations on deontic states.
//
// Facts zoom the deliberation subset in; obligations carve levels into the
// orderings. An obligation update first tries a plain reduction of the
// ideality relation; if the pref test then fails it retries after
// introducing an exceptionality level for the antecedent, and gives up to
// the absurd state otherwise. The test operators ideal/ideal* leave the
// state alone on success and return the absurd state on failure.

#include <cstdint>
#include <utility>

#include "deon/errors.hpp"
#include "deon/formula.hpp"
#include "deon/state.hpp"
#include "deon/worlds.hpp"

namespace deon {

// Reduction: drop the ideality pairs that rank the most normal violating
// worlds at least as ideal as the most normal complying worlds. Only the
// ideality relation changes.
inline DeonticState reduce(const DeonticState& s, const Prop& alpha, const Prop& beta) {
  std::size_t n = s.world_count();
  WorldSet beta_worlds = detail::satisfying_set(beta, n);
  WorldSet alpha_worlds = detail::satisfying_set(alpha, n);
  WorldSet violating = beta_worlds;
  violating.subtract(alpha_worlds);
  WorldSet w1 = minimal_under(s.normality, violating);
  WorldSet w2 = minimal_under(s.normality, beta_worlds & alpha_worlds);

  DeonticState out = s;
  out.ideality.remove_product(w1, w2);
  return out;
}

// Exceptionality level: make the most normal antecedent worlds strictly
// less normal than the most normal non-antecedent worlds, and repair the
// ideality distinction among them (complying at least as ideal as
// violating). Raises NormalityDegenerateError when the updated normality
// relation is no longer a total preorder.
inline DeonticState add_exception(const DeonticState& s, const Prop& alpha, const Prop& beta) {
  std::size_t n = s.world_count();
  WorldSet beta_worlds = detail::satisfying_set(beta, n);
  WorldSet alpha_worlds = detail::satisfying_set(alpha, n);
  WorldSet w1 = minimal_under(s.normality, beta_worlds);
  WorldSet w2 = minimal_under(s.normality, beta_worlds.complement());
  WorldSet w11 = w1 & alpha_worlds;
  WorldSet w12 = w1;
  w12.subtract(alpha_worlds);

  DeonticState out = s;
  out.ideality.add_product(w11, w12);
  out.normality.remove_product(w1, w2);
  if (!out.normality.is_reflexive() || !out.normality.is_transitive() ||
      !out.normality.is_totally_connected())
    throw NormalityDegenerateError(
        "normality relation is no longer a total preorder after exception introduction");
  return out;
}

inline DeonticState update(const DeonticState& s, const Sentence& phi) {
  switch (phi.kind) {
    case SentenceKind::Fact: {
      WorldSet remaining =
          s.wstar & detail::satisfying_set(phi.consequent, s.world_count());
      if (remaining.empty()) return absurd_state(s.vocab);
      DeonticState out = s;
      out.wstar = std::move(remaining);
      return out;
    }
    case SentenceKind::Oblige: {
      if (is_absurd(s)) return s;
      // Contingency: both compliance and violation must be possible
      // somewhere in the full world set.
      std::size_t n = s.world_count();
      WorldSet beta_worlds = detail::satisfying_set(phi.antecedent, n);
      WorldSet alpha_worlds = detail::satisfying_set(phi.consequent, n);
      WorldSet violating = beta_worlds;
      violating.subtract(alpha_worlds);
      if (violating.empty() || !beta_worlds.intersects(alpha_worlds))
        return absurd_state(s.vocab);

      DeonticState reduced = reduce(s, phi.consequent, phi.antecedent);
      if (pref(reduced, phi.antecedent, phi.consequent)) return reduced;

      // Conflict: exception level first, then the reduction, with the
      // most normal sets recomputed under the new normality relation.
      DeonticState excepted =
          reduce(add_exception(s, phi.consequent, phi.antecedent), phi.consequent,
                 phi.antecedent);
      if (pref(excepted, phi.antecedent, phi.consequent)) return excepted;
      return absurd_state(s.vocab);
    }
    case SentenceKind::Ideal:
      return pref(s, phi.antecedent, phi.consequent) ? s : absurd_state(s.vocab);
    case SentenceKind::IdealStar:
      return pref_star(s, phi.antecedent, phi.consequent) ? s : absurd_state(s.vocab);
  }
  return absurd_state(s.vocab);  // unreachable
}

// Acceptance: updating with phi is the identity.
inline bool accepts(const DeonticState& s, const Sentence& phi) {
  return states_equal(update(s, phi), s);
}

}  // namespace deon
