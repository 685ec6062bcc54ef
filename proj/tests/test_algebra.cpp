#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "lewis/algebra.hpp"
#include "lewis/kripke.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"
#include "lewis/search.hpp"

using namespace lewis;

namespace {
Algebra fixture() {
  return load_mace4_file(std::string(LEWIS_FIXTURE_DIR) + "/mace4-6elem.alg");
}
}  // namespace

TEST_CASE("the six-element fixture loads with its named constants") {
  Algebra a = fixture();
  CHECK(a.n == 6);
  CHECK(a.top == 1);
  CHECK(a.bot == 0);
  CHECK(verify_heyting(a).ok);
  CHECK(check_ck(a));
  CHECK(check_ct(a));
  CHECK(check_ci(a));
  CHECK(!check_cd(a));
  CHECK(a.consts == std::map<std::string, int>{{"c1", 2}, {"c2", 4}, {"c3", 3}});
}

TEST_CASE("verify_heyting reports tampering") {
  Algebra a = fixture();
  a.meet[0 * a.n + 1] = 5;  // breaks commutativity / order structure
  HeytingReport r = verify_heyting(a);
  CHECK(!r.ok);
  CHECK(!r.violations.empty());
}

TEST_CASE("eval is a homomorphism into the tables") {
  Algebra a = fixture();
  Fml pq_and = parse("p & q"), pq_or = parse("p | q"), pq_imp = parse("p -> q"),
      pq_lew = parse("p => q");
  for (int x = 0; x < a.n; x++)
    for (int y = 0; y < a.n; y++) {
      std::map<std::string, int> v{{"p", x}, {"q", y}};
      CHECK(eval(a, v, pq_and) == a.mt(x, y));
      CHECK(eval(a, v, pq_or) == a.jn(x, y));
      CHECK(eval(a, v, pq_imp) == a.rp(x, y));
      CHECK(eval(a, v, pq_lew) == a.lw(x, y));
    }
  CHECK(eval(a, {}, parse("T")) == a.top);
  CHECK(eval(a, {}, parse("F")) == a.bot);
  CHECK(eval(a, {{"p", 3}}, parse("~p")) == a.rp(3, a.bot));
  CHECK_THROWS_AS(eval(a, {}, parse("p")), AlgebraError);
  CHECK(algebra_validates(a, parse("p => p")));
  CHECK(!algebra_validates(a, parse("p => q")));
}

TEST_CASE("two-element expansions are exactly the enumerated stream") {
  // Boolean two-chain with every one of the 16 candidate lewis tables,
  // filtered by the defining equations by brute force.
  Algebra base;
  base.n = 2;
  base.bot = 0;
  base.top = 1;
  base.meet = {0, 0, 0, 1};
  base.join = {0, 1, 1, 1};
  base.rpc = {1, 1, 0, 1};
  std::vector<std::array<int, 4>> brute;
  for (int bits = 0; bits < 16; bits++) {
    Algebra a = base;
    a.lewis = {bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1};
    if (check_ck(a) && check_ct(a) && check_ci(a))
      brute.push_back({a.lw(0, 0), a.lw(0, 1), a.lw(1, 0), a.lw(1, 1)});
  }
  std::sort(brute.begin(), brute.end());
  CHECK(brute == std::vector<std::array<int, 4>>{{1, 1, 0, 1}, {1, 1, 1, 1}});

  std::vector<std::array<int, 4>> stream;
  enumerate_algebras(2, {}, [&](const Algebra& a) {
    CHECK(verify_heyting(a).ok);
    stream.push_back({a.lw(0, 0), a.lw(0, 1), a.lw(1, 0), a.lw(1, 1)});
    return true;
  });
  std::sort(stream.begin(), stream.end());
  CHECK(stream == brute);
}

TEST_CASE("the CD equation tracks validity of the disjunction axiom") {
  Fml di = atom_form("Di");
  Algebra a = fixture();
  CHECK(!check_cd(a));
  CHECK(!algebra_validates(a, di));

  Model sm = load_model_file(std::string(LEWIS_FIXTURE_DIR) + "/slimmesmurf.frame");
  Algebra d = dual_algebra(sm.frame);
  CHECK(check_cd(d));
  CHECK(algebra_validates(d, di));

  for (int n = 1; n <= 3; n++)
    enumerate_algebras(n, {}, [&](const Algebra& b) {
      CHECK(check_cd(b) == algebra_validates(b, di));
      return true;
    });
}

TEST_CASE("derived rule closure: a <= b forces a => b = top") {
  auto closed = [](const Algebra& a) {
    for (int x = 0; x < a.n; x++)
      for (int y = 0; y < a.n; y++)
        if (a.rp(x, y) == a.top && a.lw(x, y) != a.top) return false;
    return true;
  };
  CHECK(closed(fixture()));
  for (int n = 1; n <= 3; n++)
    enumerate_algebras(n, {}, [&](const Algebra& b) {
      CHECK(closed(b));
      return true;
    });
}

TEST_CASE("mace4 text round-trips and bad input is diagnosed") {
  Algebra a = fixture();
  Algebra rt = load_mace4(to_mace4(a));
  CHECK(rt.n == a.n);
  CHECK(rt.top == a.top);
  CHECK(rt.bot == a.bot);
  CHECK(rt.meet == a.meet);
  CHECK(rt.join == a.join);
  CHECK(rt.rpc == a.rpc);
  CHECK(rt.lewis == a.lewis);
  CHECK(rt.consts == a.consts);

  CHECK_THROWS_AS(load_mace4(""), AlgebraError);
  CHECK_THROWS_AS(load_mace4("interpretation(2, [], [function(^(_,_), [0,0,0])])."),
                  AlgebraError);
  // meet table without a top element
  CHECK_THROWS_AS(
      load_mace4("interpretation(2, [], [function(^(_,_), [0,0,0,0]), "
                 "function(*(_,_), [1,1,0,1]), function(+(_,_), [1,1,1,1])])."),
      AlgebraError);
  CHECK_THROWS_AS(load_mace4_file("/nonexistent/path.alg"), AlgebraError);
}

TEST_CASE("every single-cell bump of the fixture's lewis table is detected") {
  Algebra a = fixture();
  Fml f4 = atom_form("4circa"), f44 = atom_form("44circa");
  REQUIRE(algebra_validates(a, f4));
  REQUIRE(!algebra_validates(a, f44));
  for (int c = 0; c < a.n * a.n; c++) {
    Algebra m = a;
    m.lewis[c] = (m.lewis[c] + 1) % m.n;
    bool intact = check_ck(m) && check_ct(m) && check_ci(m) &&
                  algebra_validates(m, f4) && !algebra_validates(m, f44);
    CHECK_MESSAGE(!intact, "cell " << c / a.n << "," << c % a.n);
  }
}
