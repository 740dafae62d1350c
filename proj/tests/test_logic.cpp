#include <catch2/catch_amalgamated.hpp>

#include "amrplus/logic.hpp"
#include "amrplus/render.hpp"
#include "support/corpus.hpp"
#include "support/pipeline.hpp"

using namespace amrplus;
using testsupport::document_formula;
using testsupport::golden_corpus;
using testsupport::load_document;
using testsupport::load_golden;
using testsupport::negated_conditionals;

namespace {

const LexMap& lex() {
  static LexMap m = LexMap::builtin();
  return m;
}

Formula golden_formula(int i, Accommodation mode = Accommodation::Global) {
  return document_formula(load_golden(golden_corpus()[static_cast<std::size_t>(i)]),
                          lex(), mode);
}

}  // namespace

TEST_CASE("drs_to_fol of a single box is an existential conjunction") {
  DrsOutput out;
  out.main.referents = {"x"};
  out.main.conditions = {PredCondition{"dog.n.01", "x"}};
  CHECK(drs_to_fol(out) == exists({"x"}, atom("dog.n.01", {Term::var("x")})));
}

TEST_CASE("drs_to_fol of the universal sentence") {
  Formula got = golden_formula(12);  // A dog scared every cat (narrow dog)
  Formula want = forall(
      {"y"},
      implies(atom("cat.n.01", {Term::var("y")}),
              exists({"e", "x"},
                     conj({atom("scare.v.01", {Term::var("e")}),
                           atom("Stimulus", {Term::var("e"), Term::var("x")}),
                           atom("Experiencer", {Term::var("e"), Term::var("y")}),
                           atom("dog.n.01", {Term::var("x")})}))));
  CHECK(got == want);
}

TEST_CASE("drs_to_fol accommodates the name presupposition globally") {
  Formula got = golden_formula(13);  // Mary didn't smile.
  Formula want = exists(
      {"x"},
      conj({atom("person.n.01", {Term::var("x")}),
            atom("Name", {Term::var("x"),
                          Term::constant(Constant::string("Mary"))}),
            fnot(exists({"e"},
                        conj({atom("smile.v.01", {Term::var("e")}),
                              atom("Agent", {Term::var("e"), Term::var("x")})})))}));
  CHECK(got == want);
}

TEST_CASE("unaccommodated cross-box references are reported as free") {
  auto doc = load_golden(golden_corpus()[13]);
  auto st = validate(doc);
  auto out = translate(doc, st, lex(), Accommodation::None);
  CHECK_THROWS_MATCHES(drs_to_fol(out, Accommodation::None), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::FreeVariable;
                       }));
}

TEST_CASE("closed formulas for every golden document under global mode") {
  for (const auto& entry : golden_corpus()) {
    if (entry.plain) continue;
    INFO(entry.file);
    Formula f = document_formula(load_golden(entry), lex());
    CHECK(free_variables(f).empty());
  }
}

TEST_CASE("eval on one-element models") {
  Formula f = exists({"x"}, atom("dog", {Term::var("x")}));
  Model with_dog{{"d1"}, {{"dog", {"d1"}}}, {}, {}};
  Model without{{"d1"}, {}, {}, {}};
  CHECK(eval(f, with_dog));
  CHECK(!eval(f, without));
}

TEST_CASE("eval on the reflexive snake model") {
  // Events are individuals: each snake is also its own biting event.
  Model m;
  m.domain = {"s1", "s2"};
  m.unary["snake.n.01"] = {"s1", "s2"};
  m.unary["bite.v.01"] = {"s1", "s2"};
  m.binary["Agent"] = {{"s1", "s1"}, {"s2", "s2"}};
  m.binary["Patient"] = {{"s1", "s1"}, {"s2", "s2"}};

  Formula itself =
      document_formula(load_document("entail/every_snake_bit_itself.amrp"), lex());
  Formula every =
      document_formula(load_document("entail/every_snake_bit_every_snake.amrp"), lex());
  CHECK(eval(itself, m));
  CHECK(!eval(every, m));
}

TEST_CASE("eval rejects arity abuse and uninterpreted constants") {
  Model m{{"d1"}, {}, {}, {}};
  CHECK_THROWS_AS(
      eval(atom("p", {Term::var("x"), Term::var("x"), Term::var("x")}), m,
           {{"x", "d1"}}),
      AmrError);
  CHECK_THROWS_AS(
      eval(atom("p", {Term::constant(Constant::string("Mary"))}), m), AmrError);
}

TEST_CASE("conjunction elimination holds within the bound") {
  Formula premise = document_formula(
      load_document("entail/mary_left_yesterday.amrp"), lex());
  Formula conclusion =
      document_formula(load_document("entail/mary_left.amrp"), lex());
  auto verdict = check_entailment(premise, conclusion, 2);
  REQUIRE(!is_refuted(verdict));
  CHECK(std::get<NoCountermodelUpTo>(verdict).size == 2);
}

TEST_CASE("negation blocks conjunction elimination") {
  Formula premise = document_formula(
      load_document("entail/mary_did_not_leave.amrp"), lex());
  Formula conclusion =
      document_formula(load_document("entail/mary_left.amrp"), lex());
  auto verdict = check_entailment(premise, conclusion, 2);
  REQUIRE(is_refuted(verdict));
  const Model& counter = std::get<Refuted>(verdict).countermodel;
  CHECK(counter.domain.size() <= 2);
  // the reported countermodel really satisfies the premise and not the
  // conclusion, per the independent evaluator
  CHECK(eval(premise, counter));
  CHECK(!eval(conclusion, counter));
}

TEST_CASE("reflexive universal does not entail the doubly universal form") {
  Formula premise =
      document_formula(load_document("entail/every_snake_bit_itself.amrp"), lex());
  Formula conclusion = document_formula(
      load_document("entail/every_snake_bit_every_snake.amrp"), lex());
  auto verdict = check_entailment(premise, conclusion, 3);
  REQUIRE(is_refuted(verdict));
  const Model& counter = std::get<Refuted>(verdict).countermodel;
  CHECK(counter.domain.size() == 2);
  CHECK(eval(premise, counter));
  CHECK(!eval(conclusion, counter));
}

TEST_CASE("the converse snake direction has no small countermodel") {
  Formula premise = document_formula(
      load_document("entail/every_snake_bit_every_snake.amrp"), lex());
  Formula conclusion =
      document_formula(load_document("entail/every_snake_bit_itself.amrp"), lex());
  auto verdict = check_entailment(premise, conclusion, 2);
  CHECK(!is_refuted(verdict));
}

TEST_CASE("check_entailment guards oversized vocabularies") {
  std::vector<Formula> atoms;
  for (int i = 0; i < 12; ++i) {
    atoms.push_back(
        exists({"x"}, atom("p" + std::to_string(i), {Term::var("x")})));
  }
  Formula premise = conj(atoms);
  CHECK_THROWS_MATCHES(check_entailment(premise, premise, 3), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::VocabularyTooLarge;
                       }));
}

TEST_CASE("check_entailment rejects mixed arities") {
  Formula a = exists({"x"}, atom("p", {Term::var("x")}));
  Formula b = exists({"x"}, atom("p", {Term::var("x"), Term::var("x")}));
  CHECK_THROWS_MATCHES(check_entailment(a, b, 2), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::ArityMismatch;
                       }));
}

TEST_CASE("negation and quantifier dualities on every model up to size 2") {
  Formula f = exists({"x"}, conj({atom("dog", {Term::var("x")}),
                                  exists({"y"}, atom("saw", {Term::var("x"),
                                                             Term::var("y")}))}));
  Formula all_dogs = forall({"x"}, implies(atom("dog", {Term::var("x")}),
                                           atom("ran", {Term::var("x")})));
  Formula not_exists_not =
      fnot(exists({"x"}, fnot(implies(atom("dog", {Term::var("x")}),
                                      atom("ran", {Term::var("x")})))));
  int models = 0;
  for_each_model({"dog", "ran"}, {"saw"}, {}, 1, 2, false,
                 [&](const Model& m) {
                   ++models;
                   CHECK(eval(fnot(f), m) == !eval(f, m));
                   CHECK(eval(all_dogs, m) == eval(not_exists_not, m));
                   return false;
                 });
  CHECK(models == (1 << 3) + (1 << 8));  // sizes 1 and 2, no reduction
}

TEST_CASE("symmetry reduction visits a canonical subset") {
  int all = 0, reduced = 0;
  for_each_model({"p"}, {}, {}, 2, 2, false, [&](const Model&) {
    ++all;
    return false;
  });
  for_each_model({"p"}, {}, {}, 2, 2, true, [&](const Model&) {
    ++reduced;
    return false;
  });
  CHECK(all == 4);
  CHECK(reduced == 3);  // {}, {d1}, {d1,d2}; {d2} is {d1} relabeled
}

TEST_CASE("equivalence of conditional and negation form for everyone smiled") {
  auto doc = load_golden(golden_corpus()[8]);
  Formula cond_form = document_formula(doc, lex());
  Formula neg_form = document_formula(negated_conditionals(doc), lex());
  CHECK(!is_refuted(check_entailment(cond_form, neg_form, 3)));
  CHECK(!is_refuted(check_entailment(neg_form, cond_form, 3)));
}

TEST_CASE("read_clauses rebuilds simple boxes") {
  auto out = read_clauses("b0 REF x\nb0 dog.n.01 x\n");
  REQUIRE(out.presuppositions.empty());
  CHECK(out.main.referents == std::vector<std::string>{"x"});
  REQUIRE(out.main.conditions.size() == 1);
  CHECK(out.main.conditions[0] == Condition{PredCondition{"dog.n.01", "x"}});
}

TEST_CASE("clause output of every golden document reparses equal") {
  for (const auto& entry : golden_corpus()) {
    if (entry.plain) continue;
    INFO(entry.file);
    auto doc = load_golden(entry);
    auto out = translate(doc, validate(doc), lex());
    CHECK(read_clauses(render_clauses(out)) == out);
  }
}

TEST_CASE("read_clauses reports dangling and malformed input") {
  CHECK_THROWS_MATCHES(read_clauses("b0 NOT b1\n"), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::DanglingBox;
                       }));
  CHECK_THROWS_AS(read_clauses("b0 rel x y z\n"), AmrError);      // arity 3
  CHECK_THROWS_AS(read_clauses("b0 REF x\nb1 REF y\n"), AmrError);  // two tops
  CHECK_THROWS_AS(read_clauses("b0 NOT b1\nb1 NOT b0\nb1 REF x\n"), AmrError);
  CHECK_THROWS_AS(read_clauses("b0 REF x\nb0 NOT b1\nb2 NOT b1\nb1 REF y\n"),
                  AmrError);  // b1 used twice
}

TEST_CASE("formula rendering is stable") {
  Formula f = forall({"y"}, implies(atom("cat", {Term::var("y")}),
                                    exists({"e"}, atom("scare", {Term::var("e"),
                                                                 Term::var("y")}))));
  CHECK(to_string(f) == "forall y.(cat(y) -> exists e.scare(e,y))");
}
