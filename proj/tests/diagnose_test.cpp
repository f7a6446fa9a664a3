#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "deon/diagnose.hpp"
#include "deon/entail.hpp"
#include "deon/update.hpp"
#include "support/generators.hpp"
#include "support/naive_oracle.hpp"

using namespace deon;

namespace {

using PairSet = std::set<std::pair<int, int>>;

PairSet pairs_of(const Relation& rel) {
  PairSet out;
  for (std::uint32_t a = 0; a < rel.world_count(); ++a)
    for (std::uint32_t b = 0; b < rel.world_count(); ++b)
      if (rel.contains(a, b)) out.insert({static_cast<int>(a), static_cast<int>(b)});
  return out;
}

PairSet universal_minus(std::size_t n, const PairSet& removed) {
  PairSet out;
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b)
      if (!removed.count({a, b})) out.insert({a, b});
  return out;
}

// atoms [f, c, w]: f = bit 0, c = bit 1, w = bit 2
auto vocab_fcw() {
  return std::make_shared<Vocabulary>(std::vector<std::string>{"f", "c", "w"});
}

std::vector<Sentence> cottage_premises(const Vocabulary& v) {
  return {parse_sentence("oblige(~f)", v), parse_sentence("oblige(f given c)", v),
          parse_sentence("oblige(w & f given f)", v)};
}

DeonticState folded_cottage(std::shared_ptr<const Vocabulary> v) {
  DeonticState s = minimal_state(v);
  for (const Sentence& p : cottage_premises(*v)) s = update(s, p);
  return s;
}

}  // namespace

TEST_CASE("partition construction") {
  auto v = vocab_fcw();
  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  CHECK(part.parameters == std::vector<std::string>{"c"});
  CHECK(part.decision_variables == std::vector<std::string>{"f", "w"});
  CHECK(part.parameter_mask(*v) == 0b010u);

  CHECK_THROWS_AS(AtomPartition::with_parameters(*v, {"x"}), Error);
  CHECK_THROWS_AS(AtomPartition::with_parameters(*v, {"c", "c"}), Error);
}

TEST_CASE("strict dominance") {
  auto vp = std::make_shared<Vocabulary>(std::vector<std::string>{"p"});
  DeonticState zero = minimal_state(vp);
  // the universal relation is symmetric: nothing strictly dominates
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) CHECK(!strictly_better(zero, World{a}, World{b}));

  DeonticState reduced = reduce(zero, Prop::atom(0, "p"), Prop::top());
  CHECK(strictly_better(reduced, World{1}, World{0}));
  CHECK(!strictly_better(reduced, World{0}, World{1}));
  CHECK(!strictly_better(reduced, World{1}, World{1}));
}

TEST_CASE("the cottage state, frozen and cross-checked") {
  auto v = vocab_fcw();
  DeonticState s = folded_cottage(v);

  PairSet ideality_removed = {{1, 0}, {1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3},
                              {2, 7}, {3, 0}, {3, 4}, {5, 0}, {5, 2}, {5, 4},
                              {5, 6}, {6, 3}, {6, 7}, {7, 0}, {7, 4}};
  PairSet normality_removed;
  for (int a : {2, 3, 6, 7})
    for (int b : {0, 1, 4, 5}) normality_removed.insert({a, b});
  CHECK(pairs_of(s.ideality) == universal_minus(8, ideality_removed));
  CHECK(pairs_of(s.normality) == universal_minus(8, normality_removed));

  // independent replay with the naive reference semantics
  oracle::State ref = oracle::fold(3, cottage_premises(*v));
  CHECK(oracle::of_engine(s) == ref);
}

TEST_CASE("white fence without a cliff is a violation") {
  auto v = vocab_fcw();
  DeonticState s = update(folded_cottage(v), Sentence::fact(parse_prop("f & w & ~c", *v)));
  REQUIRE(s.wstar.indices() == std::vector<std::uint32_t>{5});

  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  DiagnosisReport rep = violation_proper(s, part);
  CHECK(rep.violation);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].first == World{5});   // f ~c w
  CHECK(rep.witnesses[0].second == World{0});  // ~f ~c ~w
  CHECK(!rep.unwitnessed);

  // the naive reference reaches the same verdict on its own replay
  oracle::State ref = oracle::fold(3, cottage_premises(*v));
  ref = oracle::update(ref, 3, Sentence::fact(parse_prop("f & w & ~c", *v)));
  oracle::Violation ref_verdict = oracle::violation(ref, 3, 0b010u);
  CHECK(ref_verdict.verdict);
  REQUIRE(ref_verdict.witnesses.size() == 1);
  CHECK(ref_verdict.witnesses[0] == oracle::Pair{5, 0});
}

TEST_CASE("white fence next to a cliff is an exception, not a violation") {
  auto v = vocab_fcw();
  DeonticState s = update(folded_cottage(v), Sentence::fact(parse_prop("f & w & c", *v)));
  REQUIRE(s.wstar.indices() == std::vector<std::uint32_t>{7});

  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  DiagnosisReport rep = violation_proper(s, part);
  CHECK(!rep.violation);
  CHECK(rep.witnesses.empty());
  REQUIRE(rep.unwitnessed);
  CHECK(*rep.unwitnessed == World{7});  // f c w

  oracle::State ref = oracle::fold(3, cottage_premises(*v));
  ref = oracle::update(ref, 3, Sentence::fact(parse_prop("f & w & c", *v)));
  CHECK(!oracle::violation(ref, 3, 0b010u).verdict);
}

TEST_CASE("witnesses satisfy all three clauses") {
  auto v = vocab_fcw();
  DeonticState s = update(folded_cottage(v), Sentence::fact(parse_prop("f & w & ~c", *v)));
  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  std::uint32_t mask = part.parameter_mask(*v);
  DiagnosisReport rep = violation_proper(s, part);
  REQUIRE(rep.violation);
  for (const auto& [realizable, better] : rep.witnesses) {
    CHECK(s.wstar.test(realizable.index));
    CHECK(!s.wstar.test(better.index));
    CHECK(strictly_better(s, better, realizable));
    CHECK(s.normality.contains(better.index, realizable.index));
    CHECK(((better.index ^ realizable.index) & mask) == 0);
  }
}

TEST_CASE("no violation when every world is still realizable") {
  auto v = vocab_fcw();
  DeonticState zero = minimal_state(v);
  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  CHECK(!violation_proper(zero, part).violation);

  DeonticState after = update(zero, parse_sentence("oblige(~f)", *v));
  CHECK(!violation_proper(after, part).violation);
}

TEST_CASE("diagnosis refuses the absurd state") {
  auto v = vocab_fcw();
  AtomPartition part = AtomPartition::with_parameters(*v, {"c"});
  CHECK_THROWS_AS(violation_proper(absurd_state(v), part), AbsurdStateError);
}

TEST_CASE("an all-parameter partition never reports a violation") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 100; ++round) {
    auto v = gen::random_vocab(rng, 3);
    DeonticState s = minimal_state(v);
    for (auto& prem : gen::random_premises(rng, *v, 4)) {
      try {
        DeonticState next = update(s, prem);
        if (!next.wstar.empty()) s = std::move(next);
      } catch (const NormalityDegenerateError&) {
        break;
      }
    }
    AtomPartition all_params = AtomPartition::with_parameters(*v, v->atoms());
    CHECK(!violation_proper(s, all_params).violation);
  }
}
