#include <catch2/catch_amalgamated.hpp>

#include <memory>
#include <random>
#include <set>

#include "deon/formula.hpp"
#include "support/generators.hpp"
#include "support/naive_oracle.hpp"

using namespace deon;

namespace {

std::shared_ptr<const Vocabulary> vocab_fc() {
  return std::make_shared<Vocabulary>(std::vector<std::string>{"f", "c"});
}

}  // namespace

TEST_CASE("vocabulary validation") {
  CHECK_THROWS_AS(Vocabulary(std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(Vocabulary({"p", "p"}), Error);
  CHECK_THROWS_AS(Vocabulary({"P"}), Error);
  CHECK_THROWS_AS(Vocabulary({"1p"}), Error);
  CHECK_THROWS_AS(Vocabulary({"given"}), Error);
  CHECK_THROWS_AS(Vocabulary({"oblige"}), Error);

  Vocabulary v({"f", "c", "w"});
  CHECK(v.size() == 3);
  CHECK(v.world_count() == 8);
  CHECK(v.index_of("c") == 1);
  CHECK(!v.index_of("x"));
}

TEST_CASE("parsing the operator forms") {
  auto v = vocab_fc();

  Sentence s = parse_sentence("oblige(~f given true)", *v);
  CHECK(s.kind == SentenceKind::Oblige);
  CHECK(s.consequent == Prop::negation(Prop::atom(0, "f")));
  CHECK(s.antecedent == Prop::top());

  // missing antecedent desugars to `given true`
  CHECK(parse_sentence("oblige(~f)", *v) == s);

  auto vt = std::make_shared<Vocabulary>(std::vector<std::string>{"t"});
  Sentence star = parse_sentence("ideal*(~t)", *vt);
  CHECK(star.kind == SentenceKind::IdealStar);
  CHECK(star.consequent == Prop::negation(Prop::atom(0, "t")));
  CHECK(star.antecedent == Prop::top());

  Sentence id = parse_sentence("ideal(f given c)", *v);
  CHECK(id.kind == SentenceKind::Ideal);

  Sentence fact = parse_sentence("f & ~c", *v);
  CHECK(fact.kind == SentenceKind::Fact);
}

TEST_CASE("parse errors") {
  auto v = vocab_fc();
  CHECK_THROWS_AS(parse_sentence("oblige(oblige(f))", *v), NestingError);
  CHECK_THROWS_AS(parse_sentence("f & oblige(c)", *v), NestingError);
  CHECK_THROWS_AS(parse_sentence("~ideal(f)", *v), NestingError);
  CHECK_THROWS_AS(parse_sentence("f & x", *v), UnknownAtomError);
  CHECK_THROWS_AS(parse_sentence("f &", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("(f & c", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("f c", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("oblige(f given)", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("oblige f", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("f < c", *v), SyntaxError);
  CHECK_THROWS_AS(parse_sentence("", *v), SyntaxError);

  try {
    parse_sentence("f & x", *v);
    FAIL("expected UnknownAtomError");
  } catch (const UnknownAtomError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("precedence and associativity") {
  auto v = std::make_shared<Vocabulary>(std::vector<std::string>{"p", "q", "r"});
  Prop p = Prop::atom(0, "p"), q = Prop::atom(1, "q"), r = Prop::atom(2, "r");

  CHECK(parse_prop("p | q & r", *v) == Prop::disjunction(p, Prop::conjunction(q, r)));
  CHECK(parse_prop("~p & q", *v) == Prop::conjunction(Prop::negation(p), q));
  CHECK(parse_prop("p -> q -> r", *v) ==
        Prop::implication(p, Prop::implication(q, r)));  // right-associative
  CHECK(parse_prop("p <-> q <-> r", *v) ==
        Prop::biconditional(Prop::biconditional(p, q), r));  // left-associative
  CHECK(parse_prop("p & q & r", *v) == Prop::conjunction(Prop::conjunction(p, q), r));
  CHECK(parse_prop("p | q -> r", *v) == Prop::implication(Prop::disjunction(p, q), r));
  CHECK(parse_prop("(p | q) & r", *v) == Prop::conjunction(Prop::disjunction(p, q), r));
  CHECK(parse_prop("~(p | q)", *v) == Prop::negation(Prop::disjunction(p, q)));
}

TEST_CASE("truth-functional evaluation") {
  auto v = vocab_fc();
  Prop p = parse_prop("f & ~c", *v);
  CHECK(eval_prop(p, World{0b01}));   // f=1, c=0
  CHECK(!eval_prop(p, World{0b11}));  // f=1, c=1
  CHECK(eval_prop(Prop::top(), World{0}));
  CHECK(eval_prop(Prop::top(), World{3}));
  CHECK(!eval_prop(parse_prop("f -> c", *v), World{0b01}));
  CHECK(eval_prop(parse_prop("f -> c", *v), World{0b00}));
  CHECK(eval_prop(parse_prop("f <-> c", *v), World{0b11}));
}

TEST_CASE("models_of") {
  auto vp = std::make_shared<Vocabulary>(std::vector<std::string>{"p"});
  WorldSet m = models_of(parse_prop("p", *vp), *vp);
  CHECK(m.indices() == std::vector<std::uint32_t>{1});

  auto v = vocab_fc();
  CHECK(models_of(parse_prop("f & ~f", *v), *v).empty());
  CHECK(models_of(parse_prop("f | c", *v), *v).count() == 3);
  CHECK(!models_of(parse_prop("f | c", *v), *v).test(0));

  CHECK_THROWS_AS(models_of(parse_prop("f", *v), *v, 1), VocabularyTooLargeError);
}

TEST_CASE("evaluation agrees with the set-based reference") {
  auto v = std::make_shared<Vocabulary>(std::vector<std::string>{"p", "q", "r"});
  std::mt19937 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    Prop p = gen::random_prop(rng, *v, 3);
    std::set<int> ref = oracle::worlds_of(p, 3);
    for (std::uint32_t w = 0; w < 8; ++w)
      REQUIRE(eval_prop(p, World{w}) == (ref.count(w) != 0));
    // negation flips membership everywhere
    for (std::uint32_t w = 0; w < 8; ++w)
      REQUIRE(eval_prop(Prop::negation(p), World{w}) == !eval_prop(p, World{w}));
  }
}

TEST_CASE("models of a formula and its negation partition the worlds") {
  auto v = std::make_shared<Vocabulary>(std::vector<std::string>{"p", "q"});
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Prop p = gen::random_prop(rng, *v, 3);
    WorldSet pos = models_of(p, *v);
    WorldSet neg = models_of(Prop::negation(p), *v);
    CHECK((pos | neg) == WorldSet::all(4));
    CHECK(!pos.intersects(neg));
  }
}

TEST_CASE("print then parse is the identity on the AST") {
  auto v = std::make_shared<Vocabulary>(std::vector<std::string>{"p", "q", "r"});
  std::mt19937 rng(99);
  for (int i = 0; i < 500; ++i) {
    Sentence s = gen::random_sentence(rng, *v);
    CHECK(parse_sentence(to_string(s), *v) == s);
  }

  // associativity-sensitive shapes
  Prop p = Prop::atom(0, "p"), q = Prop::atom(1, "q"), r = Prop::atom(2, "r");
  for (const Prop& tricky : {
           Prop::conjunction(p, Prop::conjunction(q, r)),
           Prop::implication(Prop::implication(p, q), r),
           Prop::biconditional(p, Prop::biconditional(q, r)),
           Prop::negation(Prop::disjunction(p, q)),
           Prop::disjunction(Prop::conjunction(p, q), r),
       }) {
    CHECK(parse_prop(to_string(tricky), *v) == tricky);
  }

  CHECK(to_string(parse_sentence("oblige(~f)", *vocab_fc())) == "oblige(~f)");
  CHECK(to_string(parse_sentence("oblige(f given c)", *vocab_fc())) == "oblige(f given c)");
  CHECK(to_string(parse_sentence("ideal*(~f given c)", *vocab_fc())) == "ideal*(~f given c)");
}
