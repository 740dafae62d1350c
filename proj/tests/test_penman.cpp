#include <catch2/catch_amalgamated.hpp>

#include "amrplus/penman.hpp"
#include "support/corpus.hpp"
#include "support/docgen.hpp"

using namespace amrplus;
using testsupport::golden_corpus;
using testsupport::load_golden;

TEST_CASE("parse indexed document with a negation constraint") {
  auto doc = parse("(e /1/ smile-01 :ARG0 (x /2/ woman)) {2:~1}");
  CHECK(doc.root.variable == "e");
  CHECK(doc.root.index == 1);
  CHECK(doc.root.concept_name == "smile-01");
  REQUIRE(doc.root.roles.size() == 1);
  CHECK(doc.root.roles[0].relation == "ARG0");
  REQUIRE(is_node(doc.root.roles[0].target));
  const auto& woman = target_node(doc.root.roles[0].target);
  CHECK(woman.variable == "x");
  CHECK(woman.index == 2);
  CHECK(woman.concept_name == "woman");
  REQUIRE(doc.constraints.size() == 1);
  CHECK(doc.constraints[0] == Constraint{NegConstraint{2, 1}});
}

TEST_CASE("parse minimal document") {
  auto doc = parse("(x /1/ dog) {}");
  CHECK(doc.root.variable == "x");
  CHECK(doc.root.index == 1);
  CHECK(doc.root.roles.empty());
  CHECK(doc.constraints.empty());
}

TEST_CASE("parse plain document with polarity constant") {
  auto doc = parse("(e / smile-01 :polarity - :ARG0 (x / woman))");
  CHECK(!doc.root.index.has_value());
  REQUIRE(doc.root.roles.size() == 2);
  CHECK(doc.root.roles[0].relation == "polarity");
  REQUIRE(is_constant(doc.root.roles[0].target));
  CHECK(std::get<Constant>(doc.root.roles[0].target).kind ==
        Constant::Kind::Minus);
  CHECK(!target_node(doc.root.roles[1].target).index.has_value());
}

TEST_CASE("parse shorthand and conditional constraints") {
  auto doc = parse("(x /1/ dog) {~1}");
  CHECK(doc.constraints[0] == Constraint{ShorthandNeg{1}});
  doc = parse("(x /1/ dog) {2=>1}");
  CHECK(doc.constraints[0] == Constraint{ShorthandCond{2, 1}});
  doc = parse("(x /1/ dog) {4:2=>1,2=3}");
  CHECK(doc.constraints[0] == Constraint{CondConstraint{4, 2, 1}});
  CHECK(doc.constraints[1] == Constraint{EqConstraint{2, 3}});
}

TEST_CASE("constraint set drops duplicates") {
  auto doc = parse("(x /1/ dog) {2:~1,2:~1}");
  CHECK(doc.constraints.size() == 1);
}

TEST_CASE("canonical print reproduces the indexed transitive sentence") {
  auto doc =
      parse("(e  /1/   scare-01 :ARG0 (x /2/ dog)\n :ARG1 (y /3/ cat))\n"
            "{1=3, 1=2}  # comment\n");
  CHECK(print(doc) ==
        "(e /1/ scare-01 :ARG0 (x /2/ dog) :ARG1 (y /3/ cat)) {1=2,1=3}");
}

TEST_CASE("plain documents print without slash indices or brace block") {
  auto doc = parse("(e / smile-01 :polarity - :ARG0 (x / woman))");
  CHECK(print(doc) == "(e / smile-01 :polarity - :ARG0 (x / woman))");
}

TEST_CASE("re-entrant reference prints as a bare variable") {
  auto doc = load_golden(golden_corpus()[11]);
  CHECK_THAT(print(doc), Catch::Matchers::ContainsSubstring(":poss x"));
}

TEST_CASE("golden corpus round-trips through canonical print") {
  for (const auto& entry : golden_corpus()) {
    INFO(entry.file);
    auto doc = load_golden(entry);
    std::string canonical = print(doc);
    CHECK(canonical == entry.canonical);
    CHECK(parse(canonical) == doc);
  }
}

TEST_CASE("main variable of nodes, references, and constants") {
  auto doc = parse("(x /2/ dog)");
  CHECK(main_variable(doc.root) == Term::var("x"));
  CHECK(main_variable(RoleTarget{VarRef{"x"}}) == Term::var("x"));
  Term fido = main_variable(RoleTarget{Constant::string("Fido")});
  CHECK(fido.kind == Term::Kind::Const);
  CHECK(fido.text == "Fido");
}

TEST_CASE("subamrs lists nodes with indices in source order") {
  auto doc = load_golden(golden_corpus()[1]);  // {1=2,1=3} version
  auto subs = subamrs(doc);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].first == 1);
  CHECK(subs[0].second->variable == "e");
  CHECK(subs[1].first == 2);
  CHECK(subs[1].second->variable == "x");
  CHECK(subs[2].first == 3);
  CHECK(subs[2].second->variable == "y");

  auto single = parse("(x /1/ dog) {}");
  CHECK(subamrs(single).size() == 1);

  // Double universal: three nodes; 4 and 5 live only in constraints.
  auto universal = load_golden(golden_corpus()[10]);
  auto usubs = subamrs(universal);
  REQUIRE(usubs.size() == 3);
  CHECK(usubs[0].first == 1);
  CHECK(usubs[1].first == 2);
  CHECK(usubs[2].first == 3);
}

TEST_CASE("subamrs requires indices everywhere") {
  auto doc = parse("(e / smile-01 :ARG0 (x / woman))");
  CHECK_THROWS_MATCHES(subamrs(doc), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::MissingIndex;
                       }));
}

TEST_CASE("lexical errors carry positions") {
  try {
    parse("(e /1/ smile-01 :ARG0 ^)");
    FAIL("expected a lexical error");
  } catch (const AmrError& e) {
    CHECK(e.code() == ErrorCode::LexError);
    CHECK(e.line() == 1);
    CHECK(e.column() == 23);
  }
}

TEST_CASE("binding errors") {
  CHECK_THROWS_MATCHES(parse("(e /1/ see-01 :ARG0 q)"), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::UnboundVariable;
                       }));
  CHECK_THROWS_MATCHES(parse("(e /1/ see-01 :ARG0 (e /1/ dog))"), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return e.code() == ErrorCode::DuplicateVariable;
                       }));
}

TEST_CASE("malformed constraints and indices are rejected") {
  CHECK_THROWS_AS(parse("(x /1/ dog) {1&2}"), AmrError);
  CHECK_THROWS_AS(parse("(x /1/ dog) {1=}"), AmrError);
  CHECK_THROWS_AS(parse("(x /1/ dog) {4:2=1}"), AmrError);
  CHECK_THROWS_AS(parse("(x /0/ dog) {}"), AmrError);
  CHECK_THROWS_AS(parse("(x /1/ dog) {0=>1}"), AmrError);
}

TEST_CASE("parse_all splits a multi-document stream") {
  auto docs = parse_all("# two documents\n(x /1/ dog) {}\n\n(y /1/ cat) {}\n");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].root.variable == "x");
  CHECK(docs[1].root.variable == "y");
  CHECK(parse_all("   # only a comment\n").empty());
}

TEST_CASE("mutated inputs either parse or raise a positioned error") {
  testsupport::Rng rng(20240811);
  const auto& corpus = golden_corpus();
  for (int trial = 0; trial < 400; ++trial) {
    std::string text = corpus[trial % corpus.size()].canonical;
    int edits = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < edits; ++k) {
      std::size_t pos = rng.below(static_cast<std::uint32_t>(text.size()));
      switch (rng.below(3)) {
        case 0: text.erase(pos, 1); break;
        case 1: text.insert(pos, 1, static_cast<char>(32 + rng.below(95))); break;
        default: text[pos] = static_cast<char>(32 + rng.below(95)); break;
      }
      if (text.empty()) text = "(";
    }
    try {
      auto doc = parse(text);
      CHECK(parse(print(doc)) == doc);  // anything accepted must round-trip
    } catch (const AmrError&) {
      // rejected with a structured error: fine
    }
  }
}
