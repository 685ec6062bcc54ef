#include "lewis/fixpoint.hpp"

#include <stdexcept>

namespace lewis {

Fml jv_fixpoint(const FixpointProblem& p) {
  Fml chi_top = substitute(p.chi, p.r, top());
  return mk_lewis(substitute(p.psi, p.r, mk_box(chi_top)), chi_top);
}

Fml js_fixpoint(const FixpointProblem& p) {
  return mk_lewis(substitute(p.psi, p.r, top()), substitute(p.chi, p.r, top()));
}

Fml fixpoint_equation(const FixpointProblem& p) {
  Fml theta = p.kind == FixKind::JV ? jv_fixpoint(p) : js_fixpoint(p);
  return mk_iff(theta, substitute(mk_lewis(p.psi, p.chi), p.r, theta));
}

Fml x_equation(const FixpointProblem& p) {
  return mk_iff(jv_fixpoint(p), js_fixpoint(p));
}

Fml uniqueness_instance(const Fml& chi, const std::string& r, const std::string& q) {
  if (!guarded(chi, r))
    throw std::invalid_argument("uniqueness_instance: '" + r + "' is not guarded in " +
                                to_string(chi));
  if (q == r || contains_atom(chi, q))
    throw std::invalid_argument("uniqueness_instance: '" + q + "' is not fresh in " +
                                to_string(chi));
  Fml lhs = mk_and(mk_box(mk_iff(mk_atom(r), chi)),
                   mk_box(mk_iff(mk_atom(q), substitute(chi, r, mk_atom(q)))));
  return mk_imp(lhs, mk_box(mk_iff(mk_atom(r), mk_atom(q))));
}

std::vector<Fml> fixpoint_catalog_side(int max_connectives) {
  // by_size[k] = all formulas with exactly k binary connectives, in generation
  // order; leaves are the atoms r, p and ops are tried in a fixed order, so
  // the overall sequence is deterministic.
  std::vector<std::vector<Fml>> by_size(max_connectives + 1);
  by_size[0] = {mk_atom("r"), mk_atom("p")};
  using Mk = Fml (*)(Fml, Fml);
  static const Mk ops[4] = {mk_and, mk_or, mk_imp, mk_lewis};
  for (int k = 1; k <= max_connectives; k++)
    for (int kl = 0; kl < k; kl++)
      for (const Fml& l : by_size[kl])
        for (const Fml& r : by_size[k - 1 - kl])
          for (Mk op : ops) by_size[k].push_back(op(l, r));
  std::vector<Fml> out;
  for (auto& bucket : by_size)
    for (auto& f : bucket) out.push_back(std::move(f));
  return out;
}

}  // namespace lewis
