#include <doctest.h>

#include <stdexcept>

#include "lewis/formula.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"
#include "lewis/search.hpp"
#include "lewis/stex.hpp"

using namespace lewis;

TEST_CASE("stex commutes with the propositional connectives") {
  CHECK(equal(stex(parse("p & (q -> s | F)"), "x"), parse("p & (q -> s | F)")));
  CHECK(equal(stex(parse("p => q"), "x"), parse("(x -> p) => (x -> q)")));
  CHECK(equal(stex(parse("~(p => q)"), "x"), parse("~((x -> p) => (x -> q))")));
  CHECK(equal(stex(parse("[]p"), "x"), parse("(x -> T) => (x -> p)")));
  // Nested arrows are relativized inside out.
  CHECK(equal(stex(parse("p => (q => s)"), "x"),
              parse("(x -> p) => (x -> ((x -> q) => (x -> s)))")));
}

TEST_CASE("the relativizing atom must be fresh") {
  CHECK_THROWS_AS(stex(parse("p => q"), "p"), std::invalid_argument);
  CHECK_THROWS_AS(stex(parse("x"), "x"), std::invalid_argument);
  CHECK_NOTHROW(stex(parse("p => q"), "x"));
}

TEST_CASE("stex distributes over substitution of the designated atom") {
  Fml phi = parse("(r & p) => (q -> r)");
  Fml delta = parse("[]q");
  CHECK(equal(stex(substitute(phi, "r", delta), "x"),
              substitute(stex(phi, "x"), "r", stex(delta, "x"))));
}

TEST_CASE("stexed Tr is an exact Tr instance") {
  Fml img = stex(atom_form("Tr"), "x");
  CHECK(equal(img, parse("(((x -> p) => (x -> q)) & ((x -> q) => (x -> s)))"
                         " -> ((x -> p) => (x -> s))")));
  auto m = match_scheme(img, "Tr");
  REQUIRE(m.has_value());
  CHECK(equal(scheme_instance("Tr", *m), img));
}

TEST_CASE("stexed Ka and La match their schemes after normalization") {
  for (const char* name : {"Ka", "La"}) {
    Fml img = stex(atom_form(name), "x");
    auto m = match_scheme(img, name);
    REQUIRE_MESSAGE(m.has_value(), name);
    CHECK(equal(normalize(scheme_instance(name, *m)), normalize(img)));
  }
  // The Ka image is not an exact instance: the consequent needs the
  // implication-over-conjunction rewrite.
  Fml ka = stex(atom_form("Ka"), "x");
  auto m = match_scheme(ka, "Ka");
  REQUIRE(m.has_value());
  CHECK(!equal(scheme_instance("Ka", *m), ka));
}

TEST_CASE("stexed JS instances are JS instances on the nose") {
  for (const char* psi : {"r", "r & p", "p => r"})
    for (const char* chi : {"p", "r", "[]r"}) {
      Fml inst = scheme_instance(
          "JS", {{"%psi", parse(psi)}, {"%chi", parse(chi)}, {"%r", parse("r")}});
      Fml img = stex(inst, "x");
      auto m = match_scheme(img, "JS");
      REQUIRE_MESSAGE(m.has_value(), psi << " / " << chi);
      CHECK(equal(scheme_instance("JS", *m), img));
    }
}

TEST_CASE("prefixed stex images of unconditionally valid bases stay valid") {
  std::vector<Frame> frames;
  for (int n = 1; n <= 2; n++)
    enumerate_frames(n, {}, [&](const Frame& f) {
      frames.push_back(f);
      return true;
    });
  auto valid_everywhere = [&](const Fml& f) {
    for (const Frame& fr : frames)
      if (!frame_validates(fr, f)) return false;
    return true;
  };
  for (const char* name : {"Tr", "Ka"}) {
    Fml base = atom_form(name);
    REQUIRE(valid_everywhere(base));
    CHECK(valid_everywhere(mk_imp(mk_atom("x"), stex(base, "x"))));
  }
}

TEST_CASE("stability genuinely fails outside the guaranteed bases") {
  // Di is frame-valid everywhere, but its prefixed stex image is not: the
  // relativized disjunctive antecedent no longer splits per successor.
  Fml img = mk_imp(mk_atom("x"), stex(atom_form("Di"), "x"));
  bool refuted = false;
  for (int n = 1; n <= 3 && !refuted; n++)
    enumerate_frames(n, {}, [&](const Frame& f) {
      refuted = !frame_validates(f, img);
      return !refuted;
    });
  CHECK(refuted);
}
