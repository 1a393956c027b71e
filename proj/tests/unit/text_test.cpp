#include "avm_gen.hpp"
#include "doctest.h"
#include "eventcalc/text.hpp"
#include "fixtures.hpp"

using namespace eventcalc;

TEST_CASE("canonical text of the pour fact") {
  CHECK(canonical_text(parse_text(fixtures::kPourFor30)) ==
        "[index: e1, sort: event, composed-of: [index: e, sort: process, pred: pour, "
        "agent: jack, patient: [index: x, sort: substance, pred: water], "
        "goal: [index: xa, sort: object, pred: bucket, name: A]], "
        "duration: [number: 30, unit: seconds]]");
}

TEST_CASE("canonical text basics") {
  CHECK(canonical_text(Avm("x", Sort::object)) == "[index: x, sort: object]");
  CHECK(canonical_text(Avm()) == "[]");
  CHECK(canonical_text(Avm("", Sort::process, {{"zeta", Value(Atom{"a"})},
                                                {"alpha", Value(Rational(5, 2))},
                                                {"pred", Value(Atom{"pour"})}})) ==
        "[sort: process, pred: pour, alpha: 5/2, zeta: a]");
  // A non-measure record in a measure slot keeps its sort.
  CHECK(canonical_text(Avm("", Sort::event, {{"duration", Value(Avm("", Sort::top))}})) ==
        "[sort: event, duration: [sort: top]]");
  CHECK_THROWS_AS(canonical_text(Avm("?E", Sort::event)), std::invalid_argument);
  CHECK(pattern_text(Avm("?E", Sort::event, {{"pred", Value(Var{"?V"})}})) ==
        "[index: ?E, sort: event, pred: ?V]");
}

TEST_CASE("parse_text") {
  Avm a = parse_text(fixtures::kPourFor30);
  CHECK(a.sort() == Sort::event);
  CHECK(a.get_avm("duration")->sort() == Sort::measure);
  CHECK(a.get_avm("composed-of")->get_avm("goal")->get_atom("name") == "A");

  // Feature order and whitespace do not matter.
  Avm permuted = parse_text(
      "[duration: [unit: seconds, number: 30],\n  sort: event,\n"
      "  composed-of: [goal: [name: A, pred: bucket, sort: object, index: xa],"
      " patient: [pred: water, index: x, sort: substance], agent: jack,"
      " pred: pour, sort: process, index: e], index: e1]");
  CHECK(permuted == a);

  CHECK(parse_text("[sort: top]") == Avm());
  CHECK(parse_text("[card: 0.5]").get("card")->number() == Rational(1, 2));
  CHECK(parse_text("[index: ?E, pred: ?V]").get("pred")->is_var());
}

TEST_CASE("parse_text errors") {
  CHECK_THROWS_AS(parse_text("[index: e1, index: e2]"), TextError);
  CHECK_THROWS_AS(parse_text("[pred: pour"), TextError);
  CHECK_THROWS_AS(parse_text("[sort: liquid]"), TextError);
  CHECK_THROWS_AS(parse_text("[pred: pour] trailing"), TextError);
  CHECK_THROWS_AS(parse_text("pred: pour"), TextError);
  try {
    parse_text("[index: e1,\n  pred pour]");
    FAIL("expected a syntax error");
  } catch (const TextError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("text round trip on fixtures") {
  for (auto text : fixtures::kUnstarredAvms) {
    Avm a = parse_text(text);
    CHECK(parse_text(canonical_text(a)) == a);
    CHECK(canonical_text(parse_text(canonical_text(a))) == canonical_text(a));
  }
  for (auto text : fixtures::kStarredAvms) {
    Avm a = parse_text(text);
    CHECK(parse_text(canonical_text(a)) == a);
  }
}

TEST_CASE("text round trip on generated avms") {
  gen::AvmGen g(3);
  for (int i = 0; i < 1000; ++i) {
    Avm a = g.avm(3);
    CHECK(parse_text(canonical_text(a)) == a);
  }
}
