#include <doctest.h>

#include <set>

#include "lewis/formula.hpp"
#include "lewis/parser.hpp"

using namespace lewis;

TEST_CASE("box and dot-box expand on construction") {
  Fml p = mk_atom("p");
  Fml b = mk_box(p);
  CHECK(b->op == Op::Lewis);
  CHECK(b->lhs->op == Op::Top);
  CHECK(equal(b->rhs, p));

  Fml bd = mk_boxdot(p);
  CHECK(bd->op == Op::And);
  CHECK(equal(bd->lhs, p));
  CHECK(equal(bd->rhs, b));

  Fml n = mk_neg(p);
  CHECK(n->op == Op::Imp);
  CHECK(n->rhs->op == Op::Bot);

  Fml i = mk_iff(p, b);
  CHECK(i->op == Op::And);
  CHECK(equal(i->lhs, mk_imp(p, b)));
  CHECK(equal(i->rhs, mk_imp(b, p)));
}

TEST_CASE("cmp is a total order consistent with equal") {
  std::vector<Fml> fs = {bot(),
                         top(),
                         mk_atom("p"),
                         mk_atom("q"),
                         mk_and(mk_atom("p"), mk_atom("q")),
                         mk_or(mk_atom("p"), mk_atom("q")),
                         mk_imp(mk_atom("p"), mk_atom("q")),
                         mk_lewis(mk_atom("p"), mk_atom("q")),
                         parse("(p => q) -> [](p & q)")};
  for (const Fml& a : fs)
    for (const Fml& b : fs) {
      CHECK((cmp(a, b) == 0) == equal(a, b));
      CHECK(cmp(a, b) == -cmp(b, a));
      for (const Fml& c : fs)
        if (cmp(a, b) < 0 && cmp(b, c) < 0) CHECK(cmp(a, c) < 0);
    }
  // Structurally equal but distinct shared_ptrs compare equal.
  CHECK(equal(parse("p & q"), mk_and(mk_atom("p"), mk_atom("q"))));
  std::set<Fml, FmlLess> dedup(fs.begin(), fs.end());
  dedup.insert(parse("p & q"));
  CHECK(dedup.size() == fs.size());
}

TEST_CASE("to_string round-trips through parse") {
  for (const char* text :
       {"p", "F", "T", "~p", "[]p", "[.]p", "p & q | s", "p -> q -> s",
        "(p -> q) -> s", "p => q & s", "(p => q) => s", "[]([]p -> p) -> []p",
        "((p => q) & (q => s)) -> (p => s)", "~(p | q) <-> (~p & ~q)"}) {
    Fml f = parse(text);
    CHECK(equal(parse(to_string(f)), f));
  }
}

TEST_CASE("substitute replaces atoms everywhere, including under the arrow") {
  Fml f = parse("r & (r => (q -> r))");
  Fml g = substitute(f, "r", parse("[]s"));
  CHECK(equal(g, parse("[]s & ([]s => (q -> []s))")));
  // Untouched atoms and absent variables.
  CHECK(equal(substitute(f, "q", top()), parse("r & (r => (T -> r))")));
  CHECK(substitute(f, "z", bot()) == f);
}

TEST_CASE("atoms are sorted and deduplicated") {
  Fml f = parse("(q & p) => (p | [](z -> q))");
  CHECK(atoms(f) == std::vector<std::string>{"p", "q", "z"});
  CHECK(contains_atom(f, "z"));
  CHECK(!contains_atom(f, "r"));
  CHECK(atoms(top()).empty());
}

TEST_CASE("guardedness: every occurrence under some arrow") {
  CHECK(!guarded(parse("r"), "r"));
  CHECK(guarded(parse("p"), "r"));  // vacuous
  CHECK(guarded(parse("[]r"), "r"));
  CHECK(guarded(parse("p => r"), "r"));
  CHECK(guarded(parse("r => p"), "r"));
  CHECK(!guarded(parse("r & (p => r)"), "r"));
  CHECK(guarded(parse("(r & p) => (r | q)"), "r"));
  CHECK(!guarded(parse("((r => p) -> r)"), "r"));
}

TEST_CASE("connective and node counts") {
  CHECK(connective_count(parse("p")) == 0);
  CHECK(connective_count(parse("[]p")) == 1);     // T => p
  CHECK(connective_count(parse("[.]p")) == 2);    // p & (T => p)
  CHECK(connective_count(parse("p & q -> s")) == 2);
  CHECK(node_count(parse("p")) == 1);
  CHECK(node_count(parse("p & q")) == 3);
}
