#include <catch2/catch_amalgamated.hpp>

#include "tarski/formula.hpp"
#include "tarski/parse.hpp"
#include "tarski/signature.hpp"

#include "generators.hpp"

using namespace tarski;

namespace {

Formula resolve_path(Formula root, const AstPath& path) {
  Formula f = root;
  for (int step : path) {
    switch (f.kind()) {
      case Formula::Kind::Not:
        REQUIRE(step == 0);
        f = f.child();
        break;
      case Formula::Kind::Or:
        REQUIRE((step == 0 || step == 1));
        f = step == 0 ? f.left() : f.right();
        break;
      case Formula::Kind::Forall:
        REQUIRE(step == 0);
        f = f.body();
        break;
      case Formula::Kind::Atom:
        FAIL("path descends into an atom");
    }
  }
  return f;
}

// Sentence (7): forall x1 . forall x2 . I(x1,x2)
Formula sentence7() {
  return Formula::universal(
      Variable{1},
      Formula::universal(Variable{2}, Formula::atom("I", {Variable{1}, Variable{2}})));
}

}  // namespace

TEST_CASE("render produces the canonical text") {
  Signature phil = Signature::philosophers();
  CHECK(render(Formula::universal(Variable{1}, Formula::atom("Grego", {Variable{1}}))) ==
        "forall x1 . Grego(x1)");
  CHECK(render(Formula::atom("I", {Variable{1}, Variable{2}})) == "I(x1,x2)");
  CHECK(render(Formula::negation(Formula::atom("I", {Variable{1}, Variable{1}}))) ==
        "~I(x1,x1)");
  CHECK(render(sentence7()) == "forall x1 . forall x2 . I(x1,x2)");
  CHECK(render(Formula::atom("Grego", {Constant{"aristoteles"}})) == "Grego(aristoteles)");
}

TEST_CASE("render parenthesizes quantifiers in operand position") {
  Formula p_of_c = Formula::atom("P", {Constant{"c"}});
  Formula all_p = Formula::universal(Variable{1}, Formula::atom("P", {Variable{1}}));

  CHECK(render(Formula::negation(all_p)) == "~(forall x1 . P(x1))");
  CHECK(render(Formula::disjunction(all_p, p_of_c)) == "((forall x1 . P(x1)) | P(c))");
  CHECK(render(Formula::disjunction(p_of_c, all_p)) == "(P(c) | (forall x1 . P(x1)))");
  // Negated disjunctions need no extra parentheses of their own.
  CHECK(render(Formula::negation(Formula::disjunction(p_of_c, p_of_c))) == "~(P(c) | P(c))");
}

TEST_CASE("free_variables follows the binding structure") {
  Formula open_atom = Formula::atom("I", {Variable{1}, Variable{2}});
  CHECK(free_variables(open_atom) == std::set<Variable>{Variable{1}, Variable{2}});

  Formula half_closed = Formula::universal(Variable{2}, open_atom);
  CHECK(free_variables(half_closed) == std::set<Variable>{Variable{1}});

  CHECK(free_variables(sentence7()).empty());
}

TEST_CASE("is_sentence") {
  CHECK(is_sentence(sentence7()));
  CHECK_FALSE(is_sentence(Formula::atom("I", {Variable{1}, Variable{2}})));
  CHECK(is_sentence(Formula::atom("Grego", {Constant{"aristoteles"}})));
}

TEST_CASE("subformulas lists every subformula in post-order") {
  SECTION("sentence (7) has three subformulas") {
    auto subs = subformulas(sentence7());
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].second == Formula::atom("I", {Variable{1}, Variable{2}}));
    CHECK(subs[1].second ==
          Formula::universal(Variable{2}, Formula::atom("I", {Variable{1}, Variable{2}})));
    CHECK(subs[2].second == sentence7());
    CHECK(subs[0].first == AstPath{0, 0});
    CHECK(subs[1].first == AstPath{0});
    CHECK(subs[2].first == AstPath{});
  }
  SECTION("a single atom is its own only subformula") {
    Formula atom = Formula::atom("P", {Constant{"c"}});
    auto subs = subformulas(atom);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].second == atom);
  }
  SECTION("negation adds one node") {
    auto subs = subformulas(Formula::negation(Formula::atom("I", {Variable{1}, Variable{1}})));
    CHECK(subs.size() == 2);
  }
  SECTION("paths are valid AST addresses") {
    testgen::Rng rng(7101);
    for (int i = 0; i < 50; ++i) {
      Formula f = testgen::random_formula(rng, 6);
      for (const auto& [path, sub] : subformulas(f)) {
        CHECK(resolve_path(f, path) == sub);
      }
    }
  }
}

TEST_CASE("sugar connectives desugar into the primitives") {
  Formula a = Formula::atom("P", {Constant{"c"}});
  Formula b = Formula::atom("P", {Constant{"d"}});

  CHECK(Formula::implication(a, b) == Formula::disjunction(Formula::negation(a), b));
  CHECK(Formula::conjunction(a, b) ==
        Formula::negation(
            Formula::disjunction(Formula::negation(a), Formula::negation(b))));
  CHECK(Formula::equivalence(a, b) ==
        Formula::conjunction(Formula::implication(a, b), Formula::implication(b, a)));
  CHECK(Formula::existential(Variable{1}, a) ==
        Formula::negation(Formula::universal(Variable{1}, Formula::negation(a))));

  // Desugared trees consist of primitives only.
  for (const auto& [path, sub] : subformulas(Formula::equivalence(a, b))) {
    Formula::Kind k = sub.kind();
    CHECK((k == Formula::Kind::Atom || k == Formula::Kind::Not || k == Formula::Kind::Or ||
           k == Formula::Kind::Forall));
  }
}

TEST_CASE("property: parse inverts render on random formulas") {
  Signature sig = testgen::small_signature();
  testgen::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    Formula f = testgen::random_formula(rng, 8);
    Formula reparsed = parse_formula(render(f), sig);
    REQUIRE(reparsed == f);
  }
}

TEST_CASE("property: printing is idempotent") {
  Signature sig = testgen::small_signature();
  testgen::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    std::string once = render(parse_formula(render(testgen::random_formula(rng, 6)), sig));
    std::string twice = render(parse_formula(once, sig));
    REQUIRE(once == twice);
  }
}

TEST_CASE("property: universal quantification removes its variable from the free set") {
  testgen::Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    Formula f = testgen::random_formula(rng, 5);
    Variable v{1 + rng.below(4)};
    std::set<Variable> expected = free_variables(f);
    expected.erase(v);
    REQUIRE(free_variables(Formula::universal(v, f)) == expected);
  }
}

TEST_CASE("variable index bounds are enforced") {
  CHECK_THROWS_AS(Formula::universal(Variable{0}, Formula::atom("P", {Constant{"c"}})),
                  Error);
  CHECK_THROWS_AS(Formula::atom("P", {Variable{-3}}), Error);
  CHECK_THROWS_AS(Formula::atom("P", {Variable{kMaxVariableIndex + 1}}), Error);
  CHECK_NOTHROW(Formula::atom("P", {Variable{kMaxVariableIndex}}));
}

TEST_CASE("signature invariants") {
  CHECK_THROWS_AS(Signature({{"P", 0}}, {}), SignatureError);
  CHECK_THROWS_AS(Signature({{"P", 1}}, {"P"}), SignatureError);
  CHECK_THROWS_AS(Signature({{"", 1}}, {}), SignatureError);
  CHECK_THROWS_AS(Signature({{"x3", 1}}, {}), SignatureError);
  CHECK_THROWS_AS(Signature({{"P", 1}}, {"x12"}), SignatureError);
  CHECK_NOTHROW(Signature({{"xy", 1}}, {"x_1"}));  // not variable-shaped
}
