#include <doctest.h>

#include <stdexcept>

#include "lewis/fixpoint.hpp"
#include "lewis/formula.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"

using namespace lewis;

TEST_CASE("registry is fixed") {
  const auto& reg = scheme_registry();
  REQUIRE(reg.size() == 19);
  std::vector<std::string> names;
  for (const auto& s : reg) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"Tr", "Ka", "Di", "Box", "4box", "4sub",
                                          "Lbox", "W", "S", "La", "P", "Wstar",
                                          "Wcirc", "Lcirca", "4circa", "44circa",
                                          "X", "JS", "JV"});
  CHECK(find_scheme("Tr") != nullptr);
  CHECK(find_scheme("tr") == nullptr);
  CHECK(find_scheme("JS")->tmpl == nullptr);
}

TEST_CASE("instantiation substitutes all metavariables") {
  std::map<std::string, Fml> sigma = {{"%phi", parse("p -> q")},
                                      {"%psi", parse("~s")},
                                      {"%chi", parse("[]p")}};
  CHECK(equal(scheme_instance("Tr", sigma),
              parse("(((p -> q) => ~s) & (~s => []p)) -> ((p -> q) => []p)")));
  CHECK(equal(scheme_instance("La", sigma), parse("([](p -> q) -> (p -> q)) => (p -> q)")));
  CHECK_THROWS_AS(scheme_instance("Tr", {{"%phi", parse("p")}}), std::invalid_argument);
  CHECK_THROWS_AS(scheme_instance("Nope", sigma), std::invalid_argument);
}

TEST_CASE("atom forms read the metavariables as p, q, s") {
  CHECK(equal(atom_form("Tr"), parse("((p => q) & (q => s)) -> (p => s)")));
  CHECK(equal(atom_form("Ka"), parse("((p => q) & (p => s)) -> (p => (q & s))")));
  CHECK(equal(atom_form("Di"), parse("((p => s) & (q => s)) -> ((p | q) => s)")));
  CHECK(equal(atom_form("La"), parse("([]p -> p) => p")));
  CHECK(equal(atom_form("4circa"), parse("(p => q) -> (p => (p => q))")));
  CHECK_THROWS_AS(atom_form("JS"), std::invalid_argument);
}

TEST_CASE("normalize applies the unit rewrites, bottom-up and under the arrow") {
  CHECK(equal(normalize(parse("T -> p")), parse("p")));
  CHECK(equal(normalize(parse("p -> T")), top()));
  CHECK(equal(normalize(parse("p & T")), parse("p")));
  CHECK(equal(normalize(parse("T & p")), parse("p")));
  CHECK(equal(normalize(parse("p -> (q & s)")), parse("(p -> q) & (p -> s)")));
  CHECK(equal(normalize(parse("(T -> p) => (q -> T)")), parse("p => T")));
  // Antecedent chains are flattened and sorted, so permuted chains agree.
  CHECK(equal(normalize(parse("q -> (p -> s)")), normalize(parse("p -> (q -> s)"))));
  CHECK(equal(normalize(parse("(q -> (p -> s)) => z")),
              normalize(parse("(p -> (q -> s)) => z"))));
}

TEST_CASE("matching inverts instantiation for every template") {
  std::map<std::string, Fml> sigma = {{"%phi", parse("p & z")},
                                      {"%psi", parse("q => q")},
                                      {"%chi", parse("~s")}};
  for (const Scheme& s : scheme_registry()) {
    if (!s.tmpl) continue;
    Fml inst = scheme_instance(s.name, sigma);
    auto m = match_scheme(inst, s.name);
    REQUIRE_MESSAGE(m.has_value(), s.name);
    CHECK(equal(scheme_instance(s.name, *m), inst));
  }
  CHECK(!match_scheme(parse("p -> p"), "Tr").has_value());
  CHECK_THROWS_AS(match_scheme(parse("p"), "Nope"), std::invalid_argument);
}

TEST_CASE("matching sees through the unit rewrites") {
  // A Tr instance with a redundant T antecedent and an unsorted chain.
  Fml messy = parse("((p => q) & (q => s)) -> (T -> (p => s))");
  auto m = match_scheme(messy, "Tr");
  REQUIRE(m.has_value());
  CHECK(equal(normalize(scheme_instance("Tr", *m)), normalize(messy)));
  CHECK(!match_scheme(messy, "Ka").has_value());
}

TEST_CASE("family instances are recognized and rebuilt") {
  FixpointProblem p{parse("r & q"), parse("p => r"), "r", FixKind::JS};
  Fml inst = fixpoint_equation(p);
  auto m = match_scheme(inst, "JS");
  REQUIRE(m.has_value());
  CHECK(equal(scheme_instance("JS", *m), inst));

  p.kind = FixKind::JV;
  Fml jv = fixpoint_equation(p);
  auto mjv = match_scheme(jv, "JV");
  REQUIRE(mjv.has_value());
  CHECK(equal(scheme_instance("JV", *mjv), jv));

  // The collapse equation is recoverable in the degenerate r-free shape,
  // where the two candidate fixpoints coincide syntactically.
  FixpointProblem q{parse("p"), parse("q"), "r", FixKind::JS};
  Fml x = x_equation(q);
  auto mx = match_scheme(x, "X");
  REQUIRE(mx.has_value());
  CHECK(equal(scheme_instance("X", *mx), x));

  CHECK(!match_scheme(parse("p <-> q"), "JS").has_value());
  // scheme_instance for families demands an atom for %r.
  CHECK_THROWS_AS(
      scheme_instance("JS", {{"%psi", parse("r")}, {"%chi", parse("p")}, {"%r", parse("p & q")}}),
      std::invalid_argument);
}
