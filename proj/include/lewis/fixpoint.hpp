// Explicit fixpoint constructions for formulas whose principal connective is
// the Lewis arrow, plus the associated fixpoint-equation and uniqueness
// instances.
//
// For a target phi = psi => chi with designated variable r, two candidate
// explicit fixpoints theta (with r not free in theta):
//
//   jv:  theta = psi[r := [](chi[r := T])]  =>  chi[r := T]
//   js:  theta = psi[r := T]                =>  chi[r := T]
//
// No simplification is performed on the output (a (T->a)=>b stays as is);
// equivalences hold only modulo the base logic and are checked semantically.
#pragma once

#include <vector>

#include "lewis/formula.hpp"

namespace lewis {

enum class FixKind { JV, JS };

struct FixpointProblem {
  Fml psi;
  Fml chi;
  std::string r;  // designated substitution variable
  FixKind kind = FixKind::JS;
};

Fml jv_fixpoint(const FixpointProblem& p);
Fml js_fixpoint(const FixpointProblem& p);

// theta <-> (psi => chi)[r := theta], with theta chosen by p.kind.
Fml fixpoint_equation(const FixpointProblem& p);

// jv_fixpoint <-> js_fixpoint (the collapse axiom; kind is ignored).
Fml x_equation(const FixpointProblem& p);

// ([](r <-> chi) & [](q <-> chi[r:=q])) -> [](r <-> q).
// Requires guarded(chi, r) and q fresh in chi; throws std::invalid_argument
// otherwise.
Fml uniqueness_instance(const Fml& chi, const std::string& r, const std::string& q);

// Every formula over atoms {r, p} with at most `max_connectives` binary
// connectives (from &, |, ->, =>), in a fixed deterministic order.  The
// default bound 2 yields 274 formulas.
std::vector<Fml> fixpoint_catalog_side(int max_connectives = 2);

}  // namespace lewis
