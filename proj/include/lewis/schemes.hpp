// Registry of the named axiom schemes, instantiation, and scheme recognition.
//
// Templates are formulas whose metavariables are atoms spelled %phi, %psi,
// %chi (disjoint from ordinary atoms by the leading %).  Three entries — X,
// JS, JV — are not templates but families parameterized by (psi, chi, r);
// their instances are produced by the fixpoint module.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lewis/formula.hpp"

namespace lewis {

struct Scheme {
  std::string name;
  std::vector<std::string> metavars;  // in template order, e.g. {"%phi", "%psi"}
  Fml tmpl;                           // null for the X/JS/JV families
};

// All registered schemes, fixed order:
// Tr Ka Di Box 4box 4sub Lbox W S La P Wstar Wcirc Lcirca 4circa 44circa X JS JV.
const std::vector<Scheme>& scheme_registry();

// nullptr when the name is unknown.
const Scheme* find_scheme(const std::string& name);

// Template with every metavariable replaced by its sigma image.  Families
// (X/JS/JV) read %psi, %chi and the designated atom %r from sigma and build
// the corresponding fixpoint equation.  Throws std::invalid_argument on
// unknown scheme or missing/ill-typed binding.
Fml scheme_instance(const std::string& name, const std::map<std::string, Fml>& sigma);

// Recognize phi as an instance of the named scheme.  Tries, in order:
//   1. an exact structural match (then scheme_instance(name, sigma) == phi);
//   2. a structural match of normalize(phi) against the raw template;
//   3. a bounded enumeration of subterm candidates for the metavariables,
//      accepting sigma when normalize(instance) == normalize(phi).
// Deterministic; returns nullopt when nothing fits.  Throws on unknown name.
std::optional<std::map<std::string, Fml>> match_scheme(const Fml& phi,
                                                       const std::string& name);

// Template with metavariables read as the distinct atoms p, q, s — the form
// used for frame/algebra validity testing.  Throws for the X/JS/JV families.
Fml atom_form(const std::string& name);

// Normal form used by match_scheme (every step an IPC equivalence, applied
// bottom-up, also below =>):
//   T -> a   ~>  a             a -> T     ~>  T
//   a & T    ~>  a             T & a      ~>  a
//   a -> (b & c)               ~>  (a -> b) & (a -> c)
//   a1 -> (a2 -> ... -> core)  ~>  same chain with antecedents sorted
Fml normalize(const Fml& f);

}  // namespace lewis
