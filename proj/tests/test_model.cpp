#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tarski/model.hpp"
#include "tarski/parse.hpp"

#include "generators.hpp"

using namespace tarski;

namespace {

const Model& phil() {
  static const Model m = Model::philosophers();
  return m;
}

Formula parse_phil(const std::string& text) {
  return parse_formula(text, Signature::philosophers());
}

// The four tabulated sequences, positions 1..5; the tail keeps repeating the
// fifth value.
Assignment f1() {
  return Assignment("Platão",
                    {{1, "Sócrates"}, {2, "Platão"}, {3, "Aristóteles"}, {4, "Platão"}, {5, "Platão"}});
}
Assignment f2() {
  return Assignment("Kant",
                    {{1, "Sócrates"}, {2, "Sócrates"}, {3, "Kant"}, {4, "Aristóteles"}, {5, "Kant"}});
}
Assignment f3() {
  return Assignment("Sócrates",
                    {{1, "Aristóteles"}, {2, "Platão"}, {3, "Sócrates"}, {4, "Kant"}, {5, "Sócrates"}});
}
Assignment f4() {
  return Assignment("Aristóteles",
                    {{1, "Platão"}, {2, "Aristóteles"}, {3, "Platão"}, {4, "Aristóteles"}, {5, "Aristóteles"}});
}

// Exhaustive satisfaction oracle used by the property tests below: the
// quantifier clause is re-derived by explicit iteration instead of calling
// back into the clause under test.
bool oracle_satisfies(const Model& m, const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      std::vector<std::string> tuple;
      for (const Term& t : f.args()) {
        if (const auto* v = std::get_if<Variable>(&t)) {
          tuple.push_back(a.lookup(v->index));
        } else {
          tuple.push_back(m.constant_value(std::get<Constant>(t).name));
        }
      }
      return m.extension(f.predicate()).count(tuple) != 0;
    }
    case Formula::Kind::Not:
      return !oracle_satisfies(m, a, f.child());
    case Formula::Kind::Or:
      return oracle_satisfies(m, a, f.left()) || oracle_satisfies(m, a, f.right());
    case Formula::Kind::Forall: {
      for (const std::string& d : m.domain()) {
        if (!oracle_satisfies(m, a.rebound(f.bound().index, d), f.body())) return false;
      }
      return true;
    }
  }
  return false;
}

// Every variable occurring in f, free or bound.
void collect_indices(const Formula& f, std::set<int>& out) {
  for (const auto& [path, sub] : subformulas(f)) {
    if (sub.kind() == Formula::Kind::Atom) {
      for (const Term& t : sub.args()) {
        if (const auto* v = std::get_if<Variable>(&t)) out.insert(v->index);
      }
    } else if (sub.kind() == Formula::Kind::Forall) {
      out.insert(sub.bound().index);
    }
  }
}

}  // namespace

TEST_CASE("lookup: bound positions and the default tail") {
  CHECK(f1().lookup(3) == "Aristóteles");
  CHECK(f3().lookup(4) == "Kant");
  CHECK(Assignment("Sócrates").lookup(100) == "Sócrates");
  CHECK_THROWS_AS(Assignment("Sócrates").lookup(0), ModelError);
  CHECK_THROWS_AS(Assignment("Sócrates", {{0, "Kant"}}), ModelError);
}

TEST_CASE("sequence-table satisfaction from the worked example") {
  Formula mestre = parse_phil("Mestre(x1,x2)");
  Formula not_grego_4 = parse_phil("~Grego(x4)");

  CHECK(satisfies(phil(), f1(), mestre));
  CHECK_FALSE(satisfies(phil(), f2(), mestre));
  CHECK_FALSE(satisfies(phil(), f3(), mestre));
  CHECK(satisfies(phil(), f4(), mestre));

  CHECK_FALSE(satisfies(phil(), f1(), not_grego_4));
  CHECK_FALSE(satisfies(phil(), f2(), not_grego_4));
  CHECK(satisfies(phil(), f3(), not_grego_4));
  CHECK_FALSE(satisfies(phil(), f4(), not_grego_4));
}

TEST_CASE("class-model satisfaction of I(x1,x2)") {
  Model rank2 = build_class_model(2);
  Formula inclusion = parse_formula("I(x1,x2)", Signature::lcc());

  Assignment f_prime("{}", {{1, "{}"}, {2, "{{{}}}"}});
  CHECK(satisfies(rank2, f_prime, inclusion));

  Assignment f_double_prime = f_prime.rebound(1, "{{}}");
  CHECK_FALSE(satisfies(rank2, f_double_prime, inclusion));
}

TEST_CASE("is_true on the worked sentences") {
  CHECK(is_true(phil(), parse_phil("forall x1 . Filosofo(x1)")));
  CHECK_FALSE(is_true(phil(), parse_phil("forall x1 . Grego(x1)")));
  CHECK(is_true(phil(), parse_phil("Grego(aristoteles)")));
  CHECK_THROWS_AS(is_true(phil(), parse_phil("Grego(x1)")), Error);
}

TEST_CASE("evaluate reports a refuting element for a failed universal") {
  TruthVerdict v = evaluate(phil(), Assignment("Sócrates"), parse_phil("forall x1 . Grego(x1)"));
  CHECK_FALSE(v.value);
  REQUIRE(v.counterexample.has_value());
  CHECK(v.counterexample->first == Variable{1});
  CHECK(v.counterexample->second == "Kant");

  TruthVerdict t = evaluate(phil(), Assignment("Sócrates"), parse_phil("forall x1 . Filosofo(x1)"));
  CHECK(t.value);
  CHECK_FALSE(t.counterexample.has_value());
}

TEST_CASE("satisfying_assignments enumerates the free-variable bindings") {
  SECTION("Grego(x1) holds of the three Greeks") {
    auto rows = satisfying_assignments(phil(), parse_phil("Grego(x1)"));
    std::set<std::string> elements;
    for (const auto& row : rows) {
      REQUIRE(row.size() == 1);
      elements.insert(row.at(1));
    }
    CHECK(elements == std::set<std::string>{"Sócrates", "Platão", "Aristóteles"});
  }
  SECTION("an empty extension has no satisfying bindings") {
    Model m(Signature({{"P", 1}}, {}), {"a", "b"}, {{"P", {}}}, {});
    CHECK(satisfying_assignments(m, parse_formula("P(x1)", m.signature())).empty());
  }
  SECTION("rank-1 class model: all pairs except ({{}},{})") {
    // Hand enumeration of subset pairs over {{}, {{}}}:
    //   {}  <= {}      yes      {}  <= {{}}   yes
    //   {{}} <= {}     no       {{}} <= {{}}  yes
    Model rank1 = build_class_model(1);
    auto rows = satisfying_assignments(rank1, parse_formula("I(x1,x2)", Signature::lcc()));
    REQUIRE(rows.size() == 3);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& row : rows) pairs.insert({row.at(1), row.at(2)});
    CHECK(pairs == std::set<std::pair<std::string, std::string>>{
                       {"{}", "{}"}, {"{}", "{{}}"}, {"{{}}", "{{}}"}});
  }
  SECTION("a sentence yields the single empty binding when true") {
    auto rows = satisfying_assignments(phil(), parse_phil("Grego(aristoteles)"));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].empty());
  }
  SECTION("the enumeration cap is enforced") {
    CHECK_THROWS_AS(
        satisfying_assignments(phil(), parse_phil("Mestre(x1,x2)"), /*cap=*/3),
        BudgetError);
  }
}

TEST_CASE("build_class_model") {
  SECTION("rank 0") {
    Model m = build_class_model(0);
    CHECK(m.domain() == std::vector<std::string>{"{}"});
    CHECK(m.extension("I") == std::set<std::vector<std::string>>{{"{}", "{}"}});
  }
  SECTION("rank 1") {
    Model m = build_class_model(1);
    CHECK(m.domain() == std::vector<std::string>{"{}", "{{}}"});
    CHECK(m.extension("I") == std::set<std::vector<std::string>>{
                                  {"{}", "{}"}, {"{}", "{{}}"}, {"{{}}", "{{}}"}});
  }
  SECTION("rank 2 contains the four rank-<=2 sets") {
    Model m = build_class_model(2);
    CHECK(m.domain() ==
          std::vector<std::string>{"{}", "{{}}", "{{{}}}", "{{},{{}}}"});
    CHECK(m.extension("I").count({"{}", "{{{}}}"}) == 1);
    CHECK(m.extension("I").count({"{{}}", "{{{}}}"}) == 0);
    // The empty set is a subset of every set.
    for (const auto& t : m.domain()) CHECK(m.extension("I").count({"{}", t}) == 1);
  }
  SECTION("rank 3 has all sixteen sets and inclusion is a partial order") {
    Model m = build_class_model(3);
    CHECK(m.domain().size() == 16);
    for (const auto& s : m.domain()) CHECK(m.extension("I").count({s, s}) == 1);
  }
  SECTION("rank bounds") {
    CHECK_THROWS_AS(build_class_model(-1), ModelError);
    CHECK_THROWS_AS(build_class_model(4), ModelError);
  }
}

TEST_CASE("model construction invariants") {
  Signature sig({{"P", 1}}, {"c"});
  CHECK_THROWS_AS(Model(sig, {}, {{"P", {}}}, {{"c", "a"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a", "a"}, {{"P", {}}}, {{"c", "a"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"P", {{"zzz"}}}}, {{"c", "a"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"P", {{"a", "a"}}}}, {{"c", "a"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"Q", {{"a"}}}}, {{"c", "a"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"P", {}}}, {}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"P", {}}}, {{"c", "zzz"}}), ModelError);
  CHECK_THROWS_AS(Model(sig, {"a"}, {{"P", {}}}, {{"c", "a"}, {"d", "a"}}), ModelError);
  // Missing predicate keys default to the empty extension.
  Model m(sig, {"a"}, {}, {{"c", "a"}});
  CHECK(m.extension("P").empty());
}

TEST_CASE("satisfies validates inputs against the model") {
  Formula foreign = parse_formula("P(x1)", Signature({{"P", 1}}, {}));
  CHECK_THROWS_AS(satisfies(phil(), f1(), foreign), UnknownNameError);
  CHECK_THROWS_AS(satisfies(phil(), Assignment("nobody"), parse_phil("Grego(x1)")), ModelError);
  CHECK_THROWS_AS(satisfies(phil(), Assignment("Kant", {{2, "nobody"}}), parse_phil("Grego(x1)")),
                  ModelError);
}

TEST_CASE("property: satisfaction only depends on free variables (locality)") {
  testgen::Rng rng(1001);
  for (int round = 0; round < 200; ++round) {
    Model m = testgen::random_model(rng);
    Formula f = testgen::random_formula(rng, 5);
    std::set<Variable> free = free_variables(f);

    auto pick = [&]() { return m.domain()[rng.below(static_cast<int>(m.domain().size()))]; };
    std::map<int, std::string> shared;
    for (const Variable& v : free) shared[v.index] = pick();

    // Two assignments agreeing on the free variables, scrambled elsewhere.
    std::map<int, std::string> a_bindings = shared, b_bindings = shared;
    for (int k : {5, 6, 7, 8}) {
      a_bindings[k] = pick();
      b_bindings[k] = pick();
    }
    std::set<int> occurring;
    collect_indices(f, occurring);
    for (int k : occurring) {
      if (!free.count(Variable{k})) {
        a_bindings[k] = pick();
        b_bindings[k] = pick();
      }
    }
    Assignment a(pick(), a_bindings);
    Assignment b(pick(), b_bindings);
    REQUIRE(satisfies(m, a, f) == satisfies(m, b, f));
  }
}

TEST_CASE("property: sentences are satisfied by all assignments or none") {
  testgen::Rng rng(1002);
  for (int round = 0; round < 150; ++round) {
    Model m = testgen::random_model(rng);
    Formula s = testgen::random_sentence(rng, 3);
    REQUIRE(is_sentence(s));

    std::set<int> occurring;
    collect_indices(s, occurring);
    std::vector<int> indices(occurring.begin(), occurring.end());

    // All assignments over the occurring indices, crossed with all defaults.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < indices.size(); ++i) combos *= m.domain().size();
    int reference = -1;
    for (const std::string& def : m.domain()) {
      for (std::size_t mask = 0; mask < combos; ++mask) {
        std::map<int, std::string> bindings;
        std::size_t rest = mask;
        for (int k : indices) {
          bindings[k] = m.domain()[rest % m.domain().size()];
          rest /= m.domain().size();
        }
        bool value = satisfies(m, Assignment(def, bindings), s);
        if (reference == -1) reference = value ? 1 : 0;
        REQUIRE(value == (reference == 1));
      }
    }
  }
}

TEST_CASE("property: the universal clause equals exhaustive conjunction") {
  testgen::Rng rng(1003);
  for (int round = 0; round < 300; ++round) {
    Model m = testgen::random_model(rng);
    Formula body = testgen::random_formula(rng, 4);
    int k = 1 + rng.below(4);
    Formula all = Formula::universal(Variable{k}, body);
    std::map<int, std::string> bindings;
    for (int i = 1; i <= 4; ++i) bindings[i] = m.domain()[rng.below(static_cast<int>(m.domain().size()))];
    Assignment a(m.domain()[0], bindings);

    bool conjunction = true;
    for (const std::string& d : m.domain()) {
      conjunction = conjunction && oracle_satisfies(m, a.rebound(k, d), body);
    }
    REQUIRE(satisfies(m, a, all) == conjunction);
  }
}

TEST_CASE("property: classical laws hold semantically") {
  testgen::Rng rng(1004);
  for (int round = 0; round < 100; ++round) {
    Model m = testgen::random_model(rng);
    Formula s = testgen::random_sentence(rng, 2);
    CHECK(is_true(m, Formula::disjunction(s, Formula::negation(s))));

    Formula f = testgen::random_formula(rng, 4);
    Assignment a(m.domain()[0], {{1, m.domain().back()}});
    CHECK(satisfies(m, a, Formula::negation(Formula::negation(f))) == satisfies(m, a, f));
  }
}

TEST_CASE("property: existential quantification matches direct witness search") {
  testgen::Rng rng(1005);
  for (int round = 0; round < 200; ++round) {
    Model m = testgen::random_model(rng);
    Formula body = testgen::random_formula(rng, 3);
    int k = 1 + rng.below(4);
    Assignment a(m.domain()[0]);

    bool witnessed = false;
    for (const std::string& d : m.domain()) {
      witnessed = witnessed || oracle_satisfies(m, a.rebound(k, d), body);
    }
    REQUIRE(satisfies(m, a, Formula::existential(Variable{k}, body)) == witnessed);
  }
}
