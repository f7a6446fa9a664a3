#pragma once

// Random formula and premise generators for the property suites.
// Everything is driven by a caller-owned engine so runs are reproducible.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "deon/formula.hpp"

namespace gen {

inline deon::Prop random_prop(std::mt19937& rng, const deon::Vocabulary& vocab, int depth) {
  std::uniform_int_distribution<int> leaf(0, 9);
  if (depth <= 0 || leaf(rng) < 3) {
    int pick = std::uniform_int_distribution<int>(0, static_cast<int>(vocab.size()) + 1)(rng);
    if (pick == 0) return deon::Prop::top();
    if (pick == 1) return deon::Prop::bottom();
    std::size_t i = static_cast<std::size_t>(pick - 2);
    return deon::Prop::atom(i, vocab.name(i));
  }
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return deon::Prop::negation(random_prop(rng, vocab, depth - 1));
    case 1:
      return deon::Prop::conjunction(random_prop(rng, vocab, depth - 1),
                                     random_prop(rng, vocab, depth - 1));
    case 2:
      return deon::Prop::disjunction(random_prop(rng, vocab, depth - 1),
                                     random_prop(rng, vocab, depth - 1));
    case 3:
      return deon::Prop::implication(random_prop(rng, vocab, depth - 1),
                                     random_prop(rng, vocab, depth - 1));
    default:
      return deon::Prop::biconditional(random_prop(rng, vocab, depth - 1),
                                       random_prop(rng, vocab, depth - 1));
  }
}

inline deon::Sentence random_sentence(std::mt19937& rng, const deon::Vocabulary& vocab,
                                      bool allow_tests = true) {
  int kind = std::uniform_int_distribution<int>(0, allow_tests ? 9 : 6)(rng);
  deon::Prop consequent = random_prop(rng, vocab, 2);
  if (kind < 3) return deon::Sentence::fact(std::move(consequent));
  deon::Prop antecedent = random_prop(rng, vocab, 1);
  if (kind < 7) return deon::Sentence::oblige(std::move(consequent), std::move(antecedent));
  if (kind < 9) return deon::Sentence::ideal(std::move(consequent), std::move(antecedent));
  return deon::Sentence::ideal_star(std::move(consequent), std::move(antecedent));
}

inline std::shared_ptr<const deon::Vocabulary> random_vocab(std::mt19937& rng, int max_atoms) {
  static const std::vector<std::string> pool = {"p", "q", "r", "s"};
  int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  std::vector<std::string> atoms(pool.begin(), pool.begin() + n);
  return std::make_shared<deon::Vocabulary>(std::move(atoms));
}

inline std::vector<deon::Sentence> random_premises(std::mt19937& rng,
                                                   const deon::Vocabulary& vocab, int max_count,
                                                   bool allow_tests = true) {
  int n = std::uniform_int_distribution<int>(1, max_count)(rng);
  std::vector<deon::Sentence> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(random_sentence(rng, vocab, allow_tests));
  return out;
}

}  // namespace gen
