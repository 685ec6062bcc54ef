#include <doctest.h>

#include <set>
#include <string>

#include "lewis/fixpoint.hpp"
#include "lewis/kripke.hpp"
#include "lewis/parser.hpp"
#include "lewis/search.hpp"

using namespace lewis;

TEST_CASE("the two explicit fixpoints are plain substitutions") {
  Fml psi = parse("r & p"), chi = parse("p => r");
  FixpointProblem p{psi, chi, "r", FixKind::JS};

  Fml chi_top = substitute(chi, "r", top());
  CHECK(equal(js_fixpoint(p), mk_lewis(substitute(psi, "r", top()), chi_top)));
  CHECK(equal(jv_fixpoint(p), mk_lewis(substitute(psi, "r", mk_box(chi_top)), chi_top)));
  CHECK(to_string(js_fixpoint(p)) == "T & p => (p => T)");
  CHECK(to_string(jv_fixpoint(p)) == "(T => (p => T)) & p => (p => T)");

  // r is gone from both candidates.
  CHECK(!contains_atom(js_fixpoint(p), "r"));
  CHECK(!contains_atom(jv_fixpoint(p), "r"));

  // Degenerate case from the command-line surface: psi = r, chi = F.
  FixpointProblem q{parse("r"), bot(), "r", FixKind::JS};
  CHECK(to_string(js_fixpoint(q)) == "T => F");
  CHECK(to_string(jv_fixpoint(q)) == "(T => F) => F");
}

TEST_CASE("fixpoint_equation states theta <-> phi[r := theta]") {
  FixpointProblem p{parse("r & p"), parse("p => r"), "r", FixKind::JV};
  Fml theta = jv_fixpoint(p);
  Fml expected = mk_iff(theta, substitute(mk_lewis(p.psi, p.chi), "r", theta));
  CHECK(equal(fixpoint_equation(p), expected));

  p.kind = FixKind::JS;
  theta = js_fixpoint(p);
  CHECK(equal(fixpoint_equation(p), mk_iff(theta, substitute(mk_lewis(p.psi, p.chi), "r", theta))));

  CHECK(equal(x_equation(p), mk_iff(jv_fixpoint(p), js_fixpoint(p))));
}

TEST_CASE("uniqueness_instance shape and preconditions") {
  Fml chi = parse("p => r");
  Fml expected = mk_imp(mk_and(mk_box(mk_iff(mk_atom("r"), chi)),
                               mk_box(mk_iff(mk_atom("q"), substitute(chi, "r", mk_atom("q"))))),
                        mk_box(mk_iff(mk_atom("r"), mk_atom("q"))));
  CHECK(equal(uniqueness_instance(chi, "r", "q"), expected));

  // chi with r outside every arrow is not guarded.
  CHECK_THROWS_AS(uniqueness_instance(parse("~r"), "r", "q"), std::invalid_argument);
  CHECK_THROWS_AS(uniqueness_instance(parse("r & (p => r)"), "r", "q"), std::invalid_argument);
  // q must be fresh in chi.
  CHECK_THROWS_AS(uniqueness_instance(parse("q => r"), "r", "q"), std::invalid_argument);
  // r-free chi is vacuously guarded.
  CHECK_NOTHROW(uniqueness_instance(parse("p"), "r", "q"));
}

TEST_CASE("the catalog is the deduplicated two-connective fan over {r, p}") {
  auto cat = fixpoint_catalog_side();
  REQUIRE(cat.size() == 274);

  const char* head[] = {"r", "p", "r & r", "r | r", "r -> r",
                        "r => r", "r & p", "r | p", "r -> p", "r => p"};
  for (int i = 0; i < 10; i++) CHECK(to_string(cat[i]) == head[i]);

  std::set<Fml, FmlLess> dedup(cat.begin(), cat.end());
  CHECK(dedup.size() == cat.size());

  int guarded_count = 0;
  for (const Fml& f : cat) {
    CHECK(connective_count(f) <= 2);
    for (const std::string& a : atoms(f)) CHECK((a == "r" || a == "p"));
    if (guarded(f, "r")) guarded_count++;
  }
  CHECK(guarded_count == 114);

  CHECK(fixpoint_catalog_side(0).size() == 2);   // r, p
  CHECK(fixpoint_catalog_side(1).size() == 18);  // 2 atoms + 4*4 one-connective trees
}

TEST_CASE("catalog sweeps agree with direct per-pair validation") {
  Model sm = load_model_file(std::string(LEWIS_FIXTURE_DIR) + "/slimmesmurf.frame");
  Model qm = load_model_file(std::string(LEWIS_FIXTURE_DIR) + "/querusmurf.frame");
  auto cat = fixpoint_catalog_side();

  // A frame outside the gathering class: the jv equation fails on some pairs,
  // and the sweep's count matches a direct loop over the catalog square.
  long direct = 0;
  for (const Fml& psi : cat)
    for (const Fml& chi : cat) {
      FixpointProblem p{psi, chi, "r", FixKind::JV};
      if (!frame_validates(sm.frame, fixpoint_equation(p))) direct++;
    }
  CatalogSweepReport r = sweep_catalog_frames("jv", {sm.frame});
  CHECK(direct == 920);
  CHECK(r.failures == 920);
  CHECK(r.pairs == 75076);
  CHECK(r.frames == 1);
  CHECK(r.first_failure != "");

  // On a Noetherian gathering frame every jv equation holds.
  CatalogSweepReport rq = sweep_catalog_frames("jv", {qm.frame});
  CHECK(rq.failures == 0);
  CHECK(rq.first_failure == "");

  // Uniqueness instances run over the guarded slice only.
  long direct_u = 0;
  for (const Fml& chi : cat)
    if (guarded(chi, "r") && !frame_validates(sm.frame, uniqueness_instance(chi, "r", "q")))
      direct_u++;
  CatalogSweepReport ru = sweep_catalog_frames("uniqueness", {sm.frame});
  CHECK(ru.pairs == 114);
  CHECK(ru.failures == direct_u);
  CHECK(direct_u == 0);

  CHECK(sweep_catalog_frames("js", {qm.frame}).failures == 0);
  CHECK_THROWS_AS(sweep_catalog_frames("nope", {qm.frame}), std::invalid_argument);
}
