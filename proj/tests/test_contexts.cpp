#include <catch2/catch_amalgamated.hpp>

#include "amrplus/contexts.hpp"
#include "support/corpus.hpp"

using namespace amrplus;
using testsupport::golden_corpus;
using testsupport::load_golden;

namespace {

ConstraintSet cs(std::initializer_list<Constraint> items) {
  return ConstraintSet(items);
}

bool has_code(const AmrError& e, ErrorCode code) { return e.code() == code; }

}  // namespace

TEST_CASE("expand_shorthand infers the smallest fresh host") {
  auto out = expand_shorthand(cs({ShorthandNeg{1}}), {1});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Constraint{NegConstraint{2, 1}});

  out = expand_shorthand(cs({ShorthandCond{2, 1}}), {1, 2});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == Constraint{CondConstraint{3, 2, 1}});

  CHECK(expand_shorthand(cs({}), {}).empty());
}

TEST_CASE("expand_shorthand allocates in constraint order and skips gaps") {
  auto out = expand_shorthand(cs({ShorthandNeg{1}, ShorthandCond{1, 3}}),
                              {1, 3, 4});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == Constraint{NegConstraint{2, 1}});
  CHECK(out[1] == Constraint{CondConstraint{5, 1, 3}});
}

TEST_CASE("expand_shorthand is idempotent") {
  std::set<ContextIndex> used = {1, 2};
  auto once = expand_shorthand(cs({ShorthandNeg{1}, PresupConstraint{2, 1}}),
                               used);
  auto twice = expand_shorthand(once, {1, 2, 3});
  CHECK(once == twice);
}

TEST_CASE("eliminate_equalities maps everything to the smallest index") {
  auto out = eliminate_equalities(cs({EqConstraint{1, 2}, EqConstraint{1, 3}}));
  CHECK(out.constraints.empty());
  CHECK(out.mapping ==
        std::map<ContextIndex, ContextIndex>{{2, 1}, {3, 1}});
}

TEST_CASE("eliminate_equalities rewrites survivors through the mapping") {
  auto out = eliminate_equalities(cs({EqConstraint{2, 3},
                                      PresupConstraint{3, 1},
                                      CondConstraint{4, 2, 1}}));
  CHECK(out.mapping == std::map<ContextIndex, ContextIndex>{{3, 2}});
  REQUIRE(out.constraints.size() == 2);
  CHECK(out.constraints.contains(PresupConstraint{2, 1}));
  CHECK(out.constraints.contains(CondConstraint{4, 2, 1}));
}

TEST_CASE("eliminate_equalities on the empty set is the identity") {
  auto out = eliminate_equalities(cs({}));
  CHECK(out.constraints.empty());
  CHECK(out.mapping.empty());
}

TEST_CASE("eliminate_equalities drops vacuous presuppositions") {
  auto out = eliminate_equalities(cs({EqConstraint{1, 2},
                                      PresupConstraint{2, 1}}));
  CHECK(out.constraints.empty());
}

TEST_CASE("eliminate_equalities flags self-negation as cyclic scope") {
  CHECK_THROWS_MATCHES(
      eliminate_equalities(cs({EqConstraint{1, 2}, NegConstraint{2, 1}})),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::CyclicScope);
      }));
  CHECK_THROWS_MATCHES(
      eliminate_equalities(cs({EqConstraint{2, 3}, CondConstraint{4, 2, 3}})),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::CyclicScope);
      }));
}

TEST_CASE("eliminate_equalities is idempotent") {
  auto once = eliminate_equalities(cs({EqConstraint{2, 3},
                                       PresupConstraint{3, 1},
                                       NegConstraint{4, 2}}));
  auto twice = eliminate_equalities(once.constraints);
  CHECK(once.constraints == twice.constraints);
  CHECK(twice.mapping.empty());
}

TEST_CASE("conditional_as_negation rewrites through the antecedent") {
  auto out = conditional_as_negation(cs({CondConstraint{4, 2, 1}}), {1, 2, 4});
  REQUIRE(out.size() == 2);
  CHECK(out.contains(NegConstraint{4, 2}));
  CHECK(out.contains(NegConstraint{2, 1}));

  CHECK(conditional_as_negation(cs({}), {}).empty());
}

TEST_CASE("build_structure places negations") {
  auto st = build_structure(cs({NegConstraint{2, 1}}), {1, 2});
  CHECK(st.root == 2);
  CHECK(st.placement.at(1) == Placement{NegIn{2}});
  CHECK(st.placement.at(2) == Placement{RootPlacement{}});
}

TEST_CASE("build_structure places presuppositions") {
  auto st = build_structure(cs({PresupConstraint{3, 1}, NegConstraint{2, 1}}),
                            {1, 2, 3});
  CHECK(st.root == 2);
  CHECK(st.placement.at(1) == Placement{NegIn{2}});
  CHECK(st.placement.at(3) == Placement{PresupOf{1}});
}

TEST_CASE("build_structure rejects self-negation as cyclic") {
  CHECK_THROWS_MATCHES(
      build_structure(cs({NegConstraint{1, 1}}), {1}), AmrError,
      Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::CyclicScope);
      }));
}

TEST_CASE("build_structure detects unreachable cycles") {
  // 2 and 3 negate each other below an otherwise fine root.
  CHECK_THROWS_MATCHES(
      build_structure(cs({NegConstraint{2, 3}, NegConstraint{3, 2}}),
                      {1, 2, 3}),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::CyclicScope);
      }));
}

TEST_CASE("build_structure reports double placement") {
  CHECK_THROWS_MATCHES(
      build_structure(cs({NegConstraint{2, 1}, NegConstraint{3, 1}}),
                      {1, 2, 3}),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::DoublePlacement);
      }));
}

TEST_CASE("build_structure reports missing and multiple roots") {
  CHECK_THROWS_MATCHES(
      build_structure(cs({NegConstraint{1, 2}, NegConstraint{2, 1}}), {1, 2}),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::NoRoot);
      }));
  CHECK_THROWS_MATCHES(
      build_structure(cs({NegConstraint{2, 1}, NegConstraint{4, 3}}),
                      {1, 2, 3, 4}),
      AmrError, Catch::Matchers::Predicate<AmrError>([](const auto& e) {
        return has_code(e, ErrorCode::MultiRoot);
      }));
}

TEST_CASE("structural constraints win over presupposition placement") {
  // Presupposition of an index that a conditional already places: bound.
  auto st = build_structure(
      cs({CondConstraint{4, 2, 1}, PresupConstraint{2, 1}}), {1, 2, 4});
  CHECK(st.root == 4);
  REQUIRE(st.discharged.size() == 1);
  CHECK(st.discharged[0] == PresupConstraint{2, 1});
  CHECK(st.placement.at(2) == Placement{AnteOf{4, 1}});
}

TEST_CASE("validate handles every golden document") {
  for (const auto& entry : golden_corpus()) {
    if (entry.plain) continue;
    INFO(entry.file);
    auto doc = load_golden(entry);
    auto st = validate(doc);
    CHECK(st.root == entry.root);
  }
}

TEST_CASE("validate on the bear presupposition") {
  auto st = validate(load_golden(golden_corpus()[3]));
  CHECK(st.root == 1);
  CHECK(st.placement.at(2) == Placement{PresupOf{1}});
}

TEST_CASE("validate on nobody smiled") {
  auto st = validate(load_golden(golden_corpus()[14]));
  CHECK(st.root == 4);
  CHECK(st.placement.at(2) == Placement{AnteOf{4, 3}});
  CHECK(st.placement.at(3) == Placement{ConsOf{4, 2}});
  CHECK(st.placement.at(1) == Placement{NegIn{3}});
}

TEST_CASE("validate merges node indices through equalities") {
  auto st = validate(load_golden(golden_corpus()[1]));
  CHECK(st.root == 1);
  CHECK(st.representative(2) == 1);
  CHECK(st.representative(3) == 1);
  CHECK(st.placement.size() == 1);
}

TEST_CASE("validate flags a context the constraints never situate") {
  auto doc = parse("(e /1/ see-01 :ARG0 (x /9/ dog)) {2:~1}");
  CHECK_THROWS_MATCHES(validate(doc), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return has_code(e, ErrorCode::Unplaced);
                       }));
}

TEST_CASE("validate requires indices on every node") {
  CHECK_THROWS_MATCHES(validate(parse("(e / smile-01)")), AmrError,
                       Catch::Matchers::Predicate<AmrError>([](const auto& e) {
                         return has_code(e, ErrorCode::MissingIndex);
                       }));
}

TEST_CASE("placement chains reach the root within |indices| steps") {
  for (const auto& entry : golden_corpus()) {
    if (entry.plain) continue;
    auto doc = load_golden(entry);
    auto st = validate(doc);
    for (const auto& [ctx, placement] : st.placement) {
      ContextIndex cur = ctx;
      std::size_t steps = 0;
      while (!st.is_root(cur)) {
        cur = st.host_of(cur);
        ++steps;
        REQUIRE(steps <= st.placement.size());
      }
    }
  }
}
