#include "doctest.h"
#include "eventcalc/lexicon.hpp"

using namespace eventcalc;

TEST_CASE("default lexicon categories") {
  const Lexicon& lex = Lexicon::standard();
  for (const char* v : {"pour", "dribble", "drip", "leak", "ooze", "seep", "siphon"}) {
    CAPTURE(v);
    const LexicalEntry* e = lex.entry(v);
    REQUIRE(e != nullptr);
    CHECK(e->category == Category::transfer_verb);
    CHECK(e->incremental_role == "patient");
    CHECK(e->constant_roles.count("agent") == 1);
  }
  CHECK(lex.entry("run")->category == Category::motion_verb);
  CHECK(lex.entry("run")->incremental_role == "path");
  CHECK(lex.entry("fill")->category == Category::fill_verb);
  CHECK_FALSE(lex.entry("fill")->incremental_role.has_value());
  CHECK(lex.entry("to")->path_sort_restriction == Sort::delimited_path);
  CHECK(lex.entry("towards")->path_sort_restriction == Sort::path);
  CHECK(lex.entry("along")->path_sort_restriction == Sort::path);
  for (const char* n : {"water", "bucket", "bridge", "river", "shore"})
    CHECK(lex.entry(n)->category == Category::nominal);
  CHECK(lex.entry("sand") == nullptr);
}

TEST_CASE("default lexicon tokens") {
  const Lexicon& lex = Lexicon::standard();
  CHECK(lex.token("poured")->cls == TokenClass::verb_past);
  CHECK(lex.token("poured")->pred == "pour");
  CHECK(lex.token("pour") == nullptr);
  CHECK(lex.token("buckets")->pred == "bucket");
  CHECK(lex.token("second")->pred == "seconds");
  for (const char* w : {"to", "towards", "along", "into", "for", "in", "of", "from"})
    CHECK(lex.token(w)->cls == TokenClass::prep);
  CHECK(lex.surface("fill", TokenClass::verb_past) == "filled");
  CHECK(lex.surface("bucket", TokenClass::noun, "plural") == "buckets");
  CHECK(lex.surface("bucket", TokenClass::noun, "count") == "bucket");
  CHECK(lex.surface("seconds", TokenClass::unit, "singular") == "second");
  CHECK(lex.surface("seconds", TokenClass::unit, "") == "seconds");
  CHECK_FALSE(lex.surface("sand", TokenClass::noun).has_value());
}

TEST_CASE("shipped lexicon file matches the built-in copy") {
  Lexicon file = Lexicon::load(EVENTCALC_DEFAULT_LEXICON);
  const Lexicon& lex = Lexicon::standard();
  REQUIRE(file.entries().size() == lex.entries().size());
  for (const auto& [pred, e] : lex.entries()) {
    const LexicalEntry* f = file.entry(pred);
    REQUIRE(f != nullptr);
    CHECK(f->category == e.category);
    CHECK(f->incremental_role == e.incremental_role);
    CHECK(f->constant_roles == e.constant_roles);
    CHECK(f->path_sort_restriction == e.path_sort_restriction);
  }
}

TEST_CASE("custom lexicon text") {
  Lexicon lex = Lexicon::parse(
      "# comment line\n"
      "\n"
      "jill name jill\n"
      "trickled verb-past trickle transfer-verb  # trailing comment\n"
      "sand noun sand mass\n"
      "across prep across path\n");
  CHECK(lex.entry("trickle")->category == Category::transfer_verb);
  CHECK(lex.entry("sand")->category == Category::nominal);
  CHECK(lex.entry("across")->path_sort_restriction == Sort::path);
  CHECK(lex.token("jill")->cls == TokenClass::name);
  CHECK(lex.entry("pour") == nullptr);
}

TEST_CASE("malformed lexicon text") {
  CHECK_THROWS_AS(Lexicon::parse("poured verb-past"), LexiconError);
  CHECK_THROWS_AS(Lexicon::parse("poured verb pour transfer-verb"), LexiconError);
  CHECK_THROWS_AS(Lexicon::parse("poured verb-past pour"), LexiconError);
  CHECK_THROWS_AS(Lexicon::parse("sand noun sand grainy"), LexiconError);
  CHECK_THROWS_AS(Lexicon::parse("sand noun sand mass\nsand noun sand mass"), LexiconError);
  CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexicon"), LexiconError);
  try {
    Lexicon::parse("a det a\nbad line\n");
    FAIL("expected an error");
  } catch (const LexiconError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
