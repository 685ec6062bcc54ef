#include "lewis/stex.hpp"

#include <stdexcept>

namespace lewis {

namespace {

Fml go(const Fml& f, const Fml& p) {
  switch (f->op) {
    case Op::Bot:
    case Op::Top:
    case Op::Atom:
      return f;
    case Op::And:
      return mk_and(go(f->lhs, p), go(f->rhs, p));
    case Op::Or:
      return mk_or(go(f->lhs, p), go(f->rhs, p));
    case Op::Imp:
      return mk_imp(go(f->lhs, p), go(f->rhs, p));
    case Op::Lewis:
      return mk_lewis(mk_imp(p, go(f->lhs, p)), mk_imp(p, go(f->rhs, p)));
  }
  return f;  // unreachable
}

}  // namespace

Fml stex(const Fml& phi, const std::string& p) {
  if (contains_atom(phi, p))
    throw std::invalid_argument("stex: atom '" + p + "' already occurs in " + to_string(phi));
  return go(phi, mk_atom(p));
}

}  // namespace lewis
