#include "lewis/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lewis {

Fml bot() {
  static const Fml f = std::make_shared<Formula>(Formula{Op::Bot, "", nullptr, nullptr});
  return f;
}

Fml top() {
  static const Fml f = std::make_shared<Formula>(Formula{Op::Top, "", nullptr, nullptr});
  return f;
}

Fml mk_atom(const std::string& name) {
  return std::make_shared<Formula>(Formula{Op::Atom, name, nullptr, nullptr});
}

static Fml mk_bin(Op op, Fml a, Fml b) {
  return std::make_shared<Formula>(Formula{op, "", std::move(a), std::move(b)});
}

Fml mk_and(Fml a, Fml b) { return mk_bin(Op::And, std::move(a), std::move(b)); }
Fml mk_or(Fml a, Fml b) { return mk_bin(Op::Or, std::move(a), std::move(b)); }
Fml mk_imp(Fml a, Fml b) { return mk_bin(Op::Imp, std::move(a), std::move(b)); }
Fml mk_lewis(Fml a, Fml b) { return mk_bin(Op::Lewis, std::move(a), std::move(b)); }

Fml mk_box(Fml a) { return mk_lewis(top(), std::move(a)); }
Fml mk_boxdot(Fml a) { return mk_and(a, mk_box(a)); }
Fml mk_neg(Fml a) { return mk_imp(std::move(a), bot()); }
Fml mk_iff(Fml a, Fml b) { return mk_and(mk_imp(a, b), mk_imp(b, a)); }

int cmp(const Fml& a, const Fml& b) {
  if (a.get() == b.get()) return 0;
  if (a->op != b->op) return a->op < b->op ? -1 : 1;
  switch (a->op) {
    case Op::Bot:
    case Op::Top:
      return 0;
    case Op::Atom:
      return a->atom.compare(b->atom);
    default: {
      int c = cmp(a->lhs, b->lhs);
      if (c != 0) return c;
      return cmp(a->rhs, b->rhs);
    }
  }
}

bool equal(const Fml& a, const Fml& b) { return cmp(a, b) == 0; }

/// Precedence, loose to tight: <->(0, parse-time only)  =>(1)  ->(2)  |(3)  &(4).
// -> is right-associative; => is non-associative, so a Lewis child of a Lewis
// node always gets parentheses.
static void print(const Fml& f, int minprec, std::ostream& out) {
  switch (f->op) {
    case Op::Bot:
      out << 'F';
      return;
    case Op::Top:
      out << 'T';
      return;
    case Op::Atom:
      out << f->atom;
      return;
    case Op::Lewis: {
      bool paren = minprec > 1;
      if (paren) out << '(';
      print(f->lhs, 2, out);
      out << " => ";
      print(f->rhs, 2, out);
      if (paren) out << ')';
      return;
    }
    case Op::Imp: {
      bool paren = minprec > 2;
      if (paren) out << '(';
      print(f->lhs, 3, out);
      out << " -> ";
      print(f->rhs, 2, out);
      if (paren) out << ')';
      return;
    }
    case Op::Or: {
      bool paren = minprec > 3;
      if (paren) out << '(';
      print(f->lhs, 3, out);
      out << " | ";
      print(f->rhs, 4, out);
      if (paren) out << ')';
      return;
    }
    case Op::And: {
      bool paren = minprec > 4;
      if (paren) out << '(';
      print(f->lhs, 4, out);
      out << " & ";
      print(f->rhs, 5, out);
      if (paren) out << ')';
      return;
    }
  }
}

std::string to_string(const Fml& f) {
  std::ostringstream out;
  print(f, 0, out);
  return out.str();
}

Fml substitute(const Fml& f, const std::string& var, const Fml& repl) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
      return f;
    case Op::Atom:
      return f->atom == var ? repl : f;
    default: {
      Fml l = substitute(f->lhs, var, repl);
      Fml r = substitute(f->rhs, var, repl);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      return std::make_shared<Formula>(Formula{f->op, "", std::move(l), std::move(r)});
    }
  }
}

static void collect_atoms(const Fml& f, std::set<std::string>& out) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
      return;
    case Op::Atom:
      out.insert(f->atom);
      return;
    default:
      collect_atoms(f->lhs, out);
      collect_atoms(f->rhs, out);
  }
}

std::vector<std::string> atoms(const Fml& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

bool contains_atom(const Fml& f, const std::string& var) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
      return false;
    case Op::Atom:
      return f->atom == var;
    default:
      return contains_atom(f->lhs, var) || contains_atom(f->rhs, var);
  }
}

bool guarded(const Fml& f, const std::string& var) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
      return true;
    case Op::Atom:
      return f->atom != var;
    case Op::Lewis:
      return true;  // everything below is under =>
    default:
      return guarded(f->lhs, var) && guarded(f->rhs, var);
  }
}

int connective_count(const Fml& f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom:
      return 0;
    default:
      return 1 + connective_count(f->lhs) + connective_count(f->rhs);
  }
}

size_t node_count(const Fml& f) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom:
      return 1;
    default:
      return 1 + node_count(f->lhs) + node_count(f->rhs);
  }
}

}  // namespace lewis
