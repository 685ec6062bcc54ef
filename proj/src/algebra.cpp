#include "lewis/algebra.hpp"

#include <sstream>

namespace lewis {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream s;
  s << "(" << a << "," << b << "," << c << ")";
  return s.str();
}

}  // namespace

HeytingReport verify_heyting(const Algebra& a) {
  HeytingReport rep;
  auto bad = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  int n = a.n;
  if (n <= 0 || (int)a.meet.size() != n * n || (int)a.join.size() != n * n ||
      (int)a.rpc.size() != n * n) {
    bad("tables are not n*n");
    return rep;
  }
  for (int x = 0; x < n * n; x++)
    if (a.meet[x] < 0 || a.meet[x] >= n || a.join[x] < 0 || a.join[x] >= n ||
        a.rpc[x] < 0 || a.rpc[x] >= n) {
      bad("table entry out of range");
      return rep;
    }

  for (int x = 0; x < n; x++) {
    if (a.mt(x, x) != x) bad("meet not idempotent at " + std::to_string(x));
    if (a.jn(x, x) != x) bad("join not idempotent at " + std::to_string(x));
    if (a.mt(x, a.top) != x) bad("top is not a meet-unit at " + std::to_string(x));
    if (a.mt(x, a.bot) != a.bot) bad("bot is not a meet-zero at " + std::to_string(x));
    for (int y = 0; y < n; y++) {
      if (a.mt(x, y) != a.mt(y, x)) bad("meet not commutative at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (a.jn(x, y) != a.jn(y, x)) bad("join not commutative at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (a.mt(x, a.jn(x, y)) != x) bad("absorption meet/join fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (a.jn(x, a.mt(x, y)) != x) bad("absorption join/meet fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      for (int z = 0; z < n; z++) {
        if (a.mt(a.mt(x, y), z) != a.mt(x, a.mt(y, z))) bad("meet not associative at " + triple(x, y, z));
        if (a.jn(a.jn(x, y), z) != a.jn(x, a.jn(y, z))) bad("join not associative at " + triple(x, y, z));
        // Residuation: x^y <= z  iff  x <= y*z.
        bool lhs = a.le(a.mt(x, y), z), rhs = a.le(x, a.rp(y, z));
        if (lhs != rhs) bad("residuation fails at " + triple(x, y, z));
      }
    }
  }
  return rep;
}

bool check_ck(const Algebra& a, std::string* why) {
  for (int x = 0; x < a.n; x++)
    for (int y = 0; y < a.n; y++)
      for (int z = 0; z < a.n; z++)
        if (a.mt(a.lw(x, y), a.lw(x, z)) != a.lw(x, a.mt(y, z))) {
          if (why) *why = "CK fails at " + triple(x, y, z);
          return false;
        }
  return true;
}

bool check_ct(const Algebra& a, std::string* why) {
  for (int x = 0; x < a.n; x++)
    for (int y = 0; y < a.n; y++)
      for (int z = 0; z < a.n; z++)
        if (!a.le(a.mt(a.lw(x, y), a.lw(y, z)), a.lw(x, z))) {
          if (why) *why = "CT fails at " + triple(x, y, z);
          return false;
        }
  return true;
}

bool check_ci(const Algebra& a, std::string* why) {
  for (int x = 0; x < a.n; x++)
    if (a.lw(x, x) != a.top) {
      if (why) *why = "CI fails at " + std::to_string(x);
      return false;
    }
  return true;
}

bool check_cd(const Algebra& a, std::string* why) {
  for (int x = 0; x < a.n; x++)
    for (int y = 0; y < a.n; y++)
      for (int z = 0; z < a.n; z++)
        if (!a.le(a.mt(a.lw(x, z), a.lw(y, z)), a.lw(a.jn(x, y), z))) {
          if (why) *why = "CD fails at " + triple(x, y, z);
          return false;
        }
  return true;
}

int eval(const Algebra& a, const std::map<std::string, int>& valuation, const Fml& phi) {
  switch (phi->op) {
    case Op::Bot:
      return a.bot;
    case Op::Top:
      return a.top;
    case Op::Atom: {
      auto it = valuation.find(phi->atom);
      if (it == valuation.end())
        throw AlgebraError("eval: no binding for atom '" + phi->atom + "'");
      return it->second;
    }
    case Op::And:
      return a.mt(eval(a, valuation, phi->lhs), eval(a, valuation, phi->rhs));
    case Op::Or:
      return a.jn(eval(a, valuation, phi->lhs), eval(a, valuation, phi->rhs));
    case Op::Imp:
      return a.rp(eval(a, valuation, phi->lhs), eval(a, valuation, phi->rhs));
    case Op::Lewis:
      return a.lw(eval(a, valuation, phi->lhs), eval(a, valuation, phi->rhs));
  }
  return a.bot;  // unreachable
}

bool algebra_validates(const Algebra& a, const Fml& phi) {
  std::vector<std::string> vars = atoms(phi);
  std::map<std::string, int> v;
  for (const auto& x : vars) v[x] = 0;
  while (true) {
    if (eval(a, v, phi) != a.top) return false;
    size_t i = vars.size();
    while (i > 0 && ++v[vars[i - 1]] == a.n) v[vars[--i]] = 0;
    if (i == 0) return true;
  }
}

}  // namespace lewis
