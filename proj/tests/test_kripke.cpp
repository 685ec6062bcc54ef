#include <doctest.h>

#include <string>

#include "lewis/algebra.hpp"
#include "lewis/kripke.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"
#include "lewis/search.hpp"

using namespace lewis;

namespace {
Model querusmurf() { return load_model_file(std::string(LEWIS_FIXTURE_DIR) + "/querusmurf.frame"); }
Model slimmesmurf() { return load_model_file(std::string(LEWIS_FIXTURE_DIR) + "/slimmesmurf.frame"); }
}  // namespace

TEST_CASE("validate_frame closes the order and enforces the laws") {
  Frame f = validate_frame({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", "b"}});
  CHECK(f.le[0] == 0b111);  // a<=a, a<=b (given), a<=c (closure)
  CHECK(f.le[1] == 0b110);
  CHECK(f.le[2] == 0b100);
  CHECK(f.sub[0] == 0b010);  // verbatim, no closure
  CHECK(f.index("c") == 2);
  CHECK(f.index("z") == -1);

  // Antisymmetry violation.
  CHECK_THROWS_AS(validate_frame({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}), FrameError);
  // Composition law: a <= b < c but not a < c.
  CHECK_THROWS_AS(validate_frame({"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}}), FrameError);
  // The law is fine when the missing pair is added.
  CHECK_NOTHROW(validate_frame({"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}, {"a", "c"}}));
  CHECK_THROWS_AS(validate_frame({"a", "a"}, {}, {}), FrameError);  // duplicate world
}

TEST_CASE("model files round-trip and reject non-upset valuations") {
  Model m = querusmurf();
  CHECK(m.frame.n == 4);
  CHECK(to_text(parse_model(to_text(m))) == to_text(m));
  CHECK(parse_model("worlds: a\n").frame.n == 1);
  // p true at a but not at b >= a is not persistent.
  CHECK_THROWS_AS(parse_model("worlds: a b\nleq: a<=b\nval p: a\n"), FrameError);
  CHECK_THROWS_AS(parse_model("worlds: a b\nleq: a<=b\nval p: c\n"), FrameError);
  CHECK_THROWS_AS(parse_model("leq: a<=b\n"), FrameError);
}

TEST_CASE("forcing clauses on the shipped four-world model") {
  Model m = querusmurf();
  const int a = m.frame.index("a"), b = m.frame.index("b"), d = m.frame.index("d");
  // p holds only at d.
  CHECK(forces(m, d, parse("p")));
  CHECK(!forces(m, b, parse("p")));
  // a's strict successors b, c do not force p, so a ||- p => F.
  CHECK(forces(m, a, parse("p => F")));
  // b has the strict successor d with p, so b does not force p => F,
  // and therefore a does not force [](p => F).
  CHECK(!forces(m, b, parse("p => F")));
  CHECK(!forces(m, a, parse("[](p => F)")));
  CHECK(!forces(m, a, parse("(p => F) -> [](p => F)")));
  CHECK(!model_validates(m, parse("(p => F) -> [](p => F)")));
  CHECK(model_validates(m, parse("p -> p")));
  // Unknown atoms are false everywhere and reported.
  std::vector<std::string> warn;
  CHECK(!forces(m, d, parse("zz"), &warn));
  CHECK(warn == std::vector<std::string>{"zz"});
}

TEST_CASE("the mask evaluator agrees with pointwise forcing") {
  for (Model m : {querusmurf(), slimmesmurf()}) {
    for (const char* text :
         {"p", "~p", "[]p", "p => F", "p => p", "[](p => F)", "p => []p",
          "([]p -> p) => p", "(p => F) -> [](p => F)", "[.]p | ~[]p"}) {
      Fml f = parse(text);
      uint32_t mask = eval_mask(m.frame, m.val, f);
      for (int w = 0; w < m.frame.n; w++)
        CHECK_MESSAGE(bool(mask >> w & 1) == forces(m, w, f), text << " at world " << w);
    }
  }
}

TEST_CASE("forcing is persistent along the intuitionistic order") {
  Model m = querusmurf();
  auto ups = upsets(m.frame);
  for (const char* text : {"p => F", "[]p", "p | ~p", "(p => F) -> [](p => F)"}) {
    uint32_t mask = eval_mask(m.frame, m.val, parse(text));
    CHECK(upset_index(m.frame, mask) >= 0);
    CHECK(std::find(ups.begin(), ups.end(), mask) != ups.end());
  }
}

TEST_CASE("upsets are ascending and indexable") {
  Frame f = validate_frame({"a", "b"}, {{"a", "b"}}, {});
  auto ups = upsets(f);
  CHECK(ups == std::vector<uint32_t>{0, 0b10, 0b11});
  CHECK(upset_index(f, 0b10) == 1);
  CHECK(upset_index(f, 0b01) == -1);  // {a} alone is not an upset

  Model m = slimmesmurf();  // discrete order: every subset is an upset
  CHECK(upsets(m.frame).size() == 8);
}

TEST_CASE("frame validity quantifies over upset valuations") {
  Model m = slimmesmurf();
  CHECK(frame_validates(m.frame, atom_form("Tr")));
  CHECK(frame_validates(m.frame, atom_form("P")));
  CHECK(frame_validates(m.frame, atom_form("Lbox")));
  // p => []p fails on this frame under the shipped valuation...
  CHECK(!forces(m, m.frame.index("a"), parse("p => []p")));
  // ...hence is not frame-valid either.
  CHECK(!frame_validates(m.frame, parse("p => []p")));
  CHECK(!frame_validates(m.frame, atom_form("4sub")));
}

TEST_CASE("named frame conditions") {
  CHECK(condition_names().size() == 10);
  Model sm = slimmesmurf(), qm = querusmurf();
  for (const char* c : {"lewis", "brilliant", "semi_transitive", "transitive_sub",
                        "noetherian", "discrete", "gather_transitive"})
    CHECK_MESSAGE(frame_condition(sm.frame, c).holds, c);
  for (const char* c : {"gathering", "supergathering", "strong"})
    CHECK_MESSAGE(!frame_condition(sm.frame, c).holds, c);
  CHECK(frame_condition(qm.frame, "supergathering").holds);
  CHECK(frame_condition(qm.frame, "gathering").holds);
  CHECK(!frame_condition(qm.frame, "discrete").holds);
  CHECK(!frame_condition(qm.frame, "transitive_sub").holds);
  CHECK(!frame_condition(qm.frame, "brilliant").holds);
  CHECK_THROWS_AS(frame_condition(sm.frame, "nope"), FrameError);
  CHECK_THROWS_AS(condition_fn("nope"), FrameError);

  // The resolved function pointer computes the same verdicts.
  for (const std::string& c : condition_names()) {
    ConditionFn fn = condition_fn(c);
    CHECK(fn(sm.frame).holds == frame_condition(sm.frame, c).holds);
    CHECK(fn(qm.frame).holds == frame_condition(qm.frame, c).holds);
  }

  // A reflexive sub point is a cycle, so the frame is not Noetherian.
  Frame loop = validate_frame({"a"}, {}, {{"a", "a"}});
  CHECK(!frame_condition(loop, "noetherian").holds);
  CHECK(frame_condition(loop, "noetherian").witness == std::vector<int>{0});
}

TEST_CASE("registered frame classes are sound for their schemes at <= 3 worlds") {
  for (const auto& [scheme, conds] : scheme_frame_classes()) {
    Fml af = atom_form(scheme);
    uint64_t bad = 0;
    for (int n = 1; n <= 3; n++)
      enumerate_frames(n, conds, [&](const Frame& f) {
        if (!frame_validates(f, af)) bad++;
        return bad == 0;
      });
    CHECK_MESSAGE(bad == 0, scheme);
  }
}

TEST_CASE("the dual algebra mirrors frame semantics") {
  Model m = querusmurf();
  Algebra d = dual_algebra(m.frame);
  CHECK(verify_heyting(d).ok);
  CHECK(check_ck(d));
  CHECK(check_ct(d));
  CHECK(check_ci(d));
  CHECK(check_cd(d));
  auto ups = upsets(m.frame);
  CHECK(d.n == int(ups.size()));

  // Element i is the i-th upset; evaluation commutes with the bit evaluator.
  for (const char* text : {"p => q", "[]p & ~q", "(p | q) => p", "p -> (q => p)"}) {
    Fml f = parse(text);
    for (uint32_t up : {ups[1], ups[ups.size() - 1], uint32_t(0)})
      for (uint32_t uq : {uint32_t(0), ups[2]}) {
        std::map<std::string, uint32_t> val{{"p", up}, {"q", uq}};
        std::map<std::string, int> el{{"p", upset_index(m.frame, up)},
                                      {"q", upset_index(m.frame, uq)}};
        CHECK(eval(d, el, f) == upset_index(m.frame, eval_mask(m.frame, val, f)));
      }
  }

  // Frame validity coincides with algebra validity across the duality.
  for (const char* text : {"p => p", "p => []p", "((p => q) & (q => s)) -> (p => s)"})
    CHECK(frame_validates(m.frame, parse(text)) == algebra_validates(d, parse(text)));
}

TEST_CASE("compiled formulas share subterms") {
  CompiledFormula cf = compile_formula(parse("(p => q) -> ((p => q) & p)"));
  CHECK(cf.atom_names == std::vector<std::string>{"p", "q"});
  // p, q, p=>q, conjunction, implication: five instructions, not six.
  CHECK(cf.ins.size() == 5);
  Model m = querusmurf();
  uint32_t masks[2] = {m.val.at("p"), 0};
  CHECK(eval_compiled(m.frame, cf, masks) ==
        eval_mask(m.frame, {{"p", m.val.at("p")}, {"q", 0}},
                  parse("(p => q) -> ((p => q) & p)")));
}
