#include <doctest.h>

#include "lewis/formula.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"

using namespace lewis;

TEST_CASE("precedence ladder: & over | over -> over => over <->") {
  CHECK(equal(parse("p & q | s"), mk_or(parse("p & q"), mk_atom("s"))));
  CHECK(equal(parse("p | q -> s"), mk_imp(parse("p | q"), mk_atom("s"))));
  CHECK(equal(parse("p -> q => s"), mk_lewis(parse("p -> q"), mk_atom("s"))));
  CHECK(equal(parse("p => q <-> s"),
              mk_and(mk_imp(parse("p => q"), mk_atom("s")),
                     mk_imp(mk_atom("s"), parse("p => q")))));
  // -> is right-associative.
  CHECK(equal(parse("p -> q -> s"), mk_imp(mk_atom("p"), parse("q -> s"))));
  // <=> is the strict bi-arrow, not a synonym for <->.
  CHECK(equal(parse("p <=> q"),
              mk_and(mk_lewis(mk_atom("p"), mk_atom("q")),
                     mk_lewis(mk_atom("q"), mk_atom("p")))));
  CHECK_THROWS_AS(parse("p <=> q <=> s"), ParseError);
}

TEST_CASE("the strict arrow does not associate") {
  CHECK_THROWS_AS(parse("p => q => s"), ParseError);
  CHECK(equal(parse("p => (q => s)"), mk_lewis(mk_atom("p"), parse("q => s"))));
  CHECK(equal(parse("(p => q) => s"), mk_lewis(parse("p => q"), mk_atom("s"))));
}

TEST_CASE("prefix operators") {
  CHECK(equal(parse("~p"), mk_imp(mk_atom("p"), bot())));
  CHECK(equal(parse("[]p"), mk_lewis(top(), mk_atom("p"))));
  CHECK(equal(parse("[.]p"), mk_and(mk_atom("p"), mk_lewis(top(), mk_atom("p")))));
  CHECK(equal(parse("~~p"), mk_imp(parse("~p"), bot())));
  CHECK(equal(parse("[][]p"), mk_lewis(top(), parse("[]p"))));
  CHECK(equal(parse("~[]p & q"), mk_and(parse("~[]p"), mk_atom("q"))));
}

TEST_CASE("atom lexing") {
  CHECK(parse("pQ_9")->atom == "pQ_9");
  CHECK(parse("F")->op == Op::Bot);
  CHECK(parse("T")->op == Op::Top);
  CHECK_THROWS_AS(parse("P"), ParseError);   // must start lower-case
  CHECK_THROWS_AS(parse("%phi"), ParseError);
  CHECK(parse_template("%phi => p")->lhs->atom == "%phi");
}

TEST_CASE("malformed input is rejected") {
  for (const char* bad : {"", "p &", "& p", "(p", "p)", "p q", "p -> -> q",
                          "p <- q", "[p]", "p = q", "p => => q"})
    CHECK_THROWS_AS(parse(bad), ParseError);
}

TEST_CASE("every registered template round-trips") {
  for (const Scheme& s : scheme_registry()) {
    if (!s.tmpl) continue;
    CHECK(equal(parse_template(to_string(s.tmpl)), s.tmpl));
  }
}
