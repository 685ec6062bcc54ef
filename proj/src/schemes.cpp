#include "lewis/schemes.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "lewis/fixpoint.hpp"
#include "lewis/parser.hpp"

namespace lewis {

namespace {

bool is_metavar(const Fml& f) {
  return f->op == Op::Atom && !f->atom.empty() && f->atom[0] == '%';
}

Scheme make_template(const char* name, const char* text) {
  Scheme s;
  s.name = name;
  s.tmpl = parse_template(text);
  std::function<void(const Fml&)> walk = [&](const Fml& f) {
    if (is_metavar(f)) {
      if (std::find(s.metavars.begin(), s.metavars.end(), f->atom) == s.metavars.end())
        s.metavars.push_back(f->atom);
    } else if (f->lhs) {
      walk(f->lhs);
      walk(f->rhs);
    }
  };
  walk(s.tmpl);
  return s;
}

// Simultaneous replacement of metavariable atoms.
Fml subst_all(const Fml& f, const std::map<std::string, Fml>& sigma) {
  if (is_metavar(f)) {
    auto it = sigma.find(f->atom);
    if (it == sigma.end())
      throw std::invalid_argument("missing metavariable binding for " + f->atom);
    return it->second;
  }
  if (!f->lhs) return f;
  Fml l = subst_all(f->lhs, sigma), r = subst_all(f->rhs, sigma);
  if (l == f->lhs && r == f->rhs) return f;
  switch (f->op) {
    case Op::And:
      return mk_and(l, r);
    case Op::Or:
      return mk_or(l, r);
    case Op::Imp:
      return mk_imp(l, r);
    default:
      return mk_lewis(l, r);
  }
}

bool unify(const Fml& tmpl, const Fml& f, std::map<std::string, Fml>& sigma) {
  if (is_metavar(tmpl)) {
    auto [it, inserted] = sigma.try_emplace(tmpl->atom, f);
    return inserted || equal(it->second, f);
  }
  if (tmpl->op != f->op) return false;
  if (tmpl->op == Op::Atom) return tmpl->atom == f->atom;
  if (!tmpl->lhs) return true;  // Bot / Top
  return unify(tmpl->lhs, f->lhs, sigma) && unify(tmpl->rhs, f->rhs, sigma);
}

FixpointProblem family_problem(const std::string& name,
                               const std::map<std::string, Fml>& sigma) {
  auto get = [&](const char* key) {
    auto it = sigma.find(key);
    if (it == sigma.end())
      throw std::invalid_argument("scheme " + name + ": missing binding for " + key);
    return it->second;
  };
  Fml r = get("%r");
  if (r->op != Op::Atom || is_metavar(r))
    throw std::invalid_argument("scheme " + name + ": %r must be bound to an atom");
  FixpointProblem p;
  p.psi = get("%psi");
  p.chi = get("%chi");
  p.r = r->atom;
  p.kind = name == "JV" ? FixKind::JV : FixKind::JS;
  return p;
}

// Every occurrence of the subterm `target` replaced by the atom `var`
// (outermost occurrences; used to invert a fixpoint substitution).
Fml fold_subterm(const Fml& f, const Fml& target, const std::string& var) {
  if (equal(f, target)) return mk_atom(var);
  if (!f->lhs) return f;
  Fml l = fold_subterm(f->lhs, target, var), r = fold_subterm(f->rhs, target, var);
  if (l == f->lhs && r == f->rhs) return f;
  switch (f->op) {
    case Op::And:
      return mk_and(l, r);
    case Op::Or:
      return mk_or(l, r);
    case Op::Imp:
      return mk_imp(l, r);
    default:
      return mk_lewis(l, r);
  }
}

std::optional<std::map<std::string, Fml>> match_family(const Fml& phi,
                                                       const std::string& name) {
  // Instances have the shape theta <-> body, i.e. (theta->body) & (body->theta).
  if (phi->op != Op::And || phi->lhs->op != Op::Imp || phi->rhs->op != Op::Imp)
    return std::nullopt;
  if (!equal(phi->lhs->lhs, phi->rhs->rhs) || !equal(phi->lhs->rhs, phi->rhs->lhs))
    return std::nullopt;
  Fml theta = phi->lhs->lhs, body = phi->rhs->lhs;
  if (body->op != Op::Lewis) return std::nullopt;

  // The designated variable is substituted away on both sides, so any fresh
  // atom will do; pick deterministically.
  std::string r = "r";
  for (int i = 0; contains_atom(phi, r); i++) r = "r" + std::to_string(i);

  std::map<std::string, Fml> sigma;
  if (name == "X") {
    // Only the degenerate (variable-free) shape is recoverable here.
    sigma = {{"%psi", body->lhs}, {"%chi", body->rhs}, {"%r", mk_atom(r)}};
  } else {
    // body = (psi => chi)[r := theta]; folding theta back into r recovers the
    // components whenever theta only entered through the substitution.
    sigma = {{"%psi", fold_subterm(body->lhs, theta, r)},
             {"%chi", fold_subterm(body->rhs, theta, r)},
             {"%r", mk_atom(r)}};
  }
  if (equal(scheme_instance(name, sigma), phi)) return sigma;
  return std::nullopt;
}

void collect_subterms(const Fml& f, std::set<Fml, FmlLess>& seen, std::vector<Fml>& out) {
  if (seen.insert(f).second) out.push_back(f);
  if (f->lhs) {
    collect_subterms(f->lhs, seen, out);
    collect_subterms(f->rhs, seen, out);
  }
}

}  // namespace

const std::vector<Scheme>& scheme_registry() {
  static const std::vector<Scheme> reg = [] {
    std::vector<Scheme> r;
    r.push_back(make_template("Tr", "((%phi => %psi) & (%psi => %chi)) -> (%phi => %chi)"));
    r.push_back(make_template("Ka", "((%phi => %psi) & (%phi => %chi)) -> (%phi => (%psi & %chi))"));
    r.push_back(make_template("Di", "((%phi => %chi) & (%psi => %chi)) -> ((%phi | %psi) => %chi)"));
    r.push_back(make_template("Box", "(%phi => %psi) -> [](%phi -> %psi)"));
    r.push_back(make_template("4box", "[]%phi -> [][]%phi"));
    r.push_back(make_template("4sub", "%phi => []%phi"));
    r.push_back(make_template("Lbox", "[]([]%phi -> %phi) -> []%phi"));
    r.push_back(make_template("W", "(%phi => %psi) -> (([]%psi -> %phi) => %psi)"));
    r.push_back(make_template("S", "%phi -> []%phi"));
    r.push_back(make_template("La", "([]%phi -> %phi) => %phi"));
    r.push_back(make_template("P", "(%phi => %psi) -> [](%phi => %psi)"));
    r.push_back(make_template("Wstar", "(%phi => %psi) -> (((%phi => %psi) -> %phi) => %psi)"));
    r.push_back(make_template("Wcirc", "((%phi & (%phi => %psi)) => %psi) -> (%phi => %psi)"));
    r.push_back(make_template("Lcirca", "(%phi => ((%phi => %psi) -> %psi)) -> (%phi => %psi)"));
    r.push_back(make_template("4circa", "(%phi => %psi) -> (%phi => (%phi => %psi))"));
    r.push_back(make_template(
        "44circa",
        "(%phi => (%psi => %chi)) -> (%phi => (%psi => (%phi => (%psi => %chi))))"));
    for (const char* fam : {"X", "JS", "JV"}) {
      Scheme s;
      s.name = fam;
      s.metavars = {"%psi", "%chi", "%r"};
      r.push_back(s);
    }
    return r;
  }();
  return reg;
}

const Scheme* find_scheme(const std::string& name) {
  for (const Scheme& s : scheme_registry())
    if (s.name == name) return &s;
  return nullptr;
}

Fml scheme_instance(const std::string& name, const std::map<std::string, Fml>& sigma) {
  const Scheme* s = find_scheme(name);
  if (!s) throw std::invalid_argument("unknown scheme: " + name);
  if (!s->tmpl) {
    FixpointProblem p = family_problem(name, sigma);
    return name == "X" ? x_equation(p) : fixpoint_equation(p);
  }
  for (const std::string& mv : s->metavars)
    if (!sigma.count(mv))
      throw std::invalid_argument("scheme " + name + ": missing binding for " + mv);
  return subst_all(s->tmpl, sigma);
}

Fml atom_form(const std::string& name) {
  const Scheme* s = find_scheme(name);
  if (!s) throw std::invalid_argument("unknown scheme: " + name);
  if (!s->tmpl)
    throw std::invalid_argument("scheme " + name + " is a family; no atom form");
  static const std::map<std::string, Fml> to_atoms = {
      {"%phi", mk_atom("p")}, {"%psi", mk_atom("q")}, {"%chi", mk_atom("s")}};
  return subst_all(s->tmpl, to_atoms);
}

Fml normalize(const Fml& f) {
  if (!f->lhs) return f;
  Fml a = normalize(f->lhs), b = normalize(f->rhs);
  switch (f->op) {
    case Op::And:
      if (a->op == Op::Top) return b;
      if (b->op == Op::Top) return a;
      return mk_and(a, b);
    case Op::Or:
      return mk_or(a, b);
    case Op::Lewis:
      return mk_lewis(a, b);
    default:
      break;
  }
  // Implication.
  if (b->op == Op::Top) return top();
  if (a->op == Op::Top) return b;
  if (b->op == Op::And) return normalize(mk_and(mk_imp(a, b->lhs), mk_imp(a, b->rhs)));
  // Flatten a -> (b1 -> ... -> core) and sort the antecedents; b is already
  // normalized, so its own chain is sorted and Top/conjunction free.
  std::vector<Fml> ants{a};
  Fml core = b;
  while (core->op == Op::Imp) {
    ants.push_back(core->lhs);
    core = core->rhs;
  }
  std::stable_sort(ants.begin(), ants.end(), FmlLess{});
  Fml out = core;
  for (auto it = ants.rbegin(); it != ants.rend(); ++it) out = mk_imp(*it, out);
  return out;
}

std::optional<std::map<std::string, Fml>> match_scheme(const Fml& phi,
                                                       const std::string& name) {
  const Scheme* s = find_scheme(name);
  if (!s) throw std::invalid_argument("unknown scheme: " + name);
  if (!s->tmpl) return match_family(phi, name);

  std::map<std::string, Fml> sigma;
  if (unify(s->tmpl, phi, sigma)) return sigma;

  Fml nphi = normalize(phi);
  sigma.clear();
  if (unify(s->tmpl, nphi, sigma) && equal(normalize(subst_all(s->tmpl, sigma)), nphi))
    return sigma;

  // Bounded search: candidate values for the metavariables are the subterms
  // of phi and of its normal form (plus the constants), tried in preorder.
  std::set<Fml, FmlLess> seen;
  std::vector<Fml> cands;
  collect_subterms(phi, seen, cands);
  collect_subterms(nphi, seen, cands);
  for (const Fml& c : {top(), bot()})
    if (seen.insert(c).second) cands.push_back(c);

  size_t k = s->metavars.size();
  std::vector<size_t> pick(k, 0);
  while (true) {
    sigma.clear();
    for (size_t i = 0; i < k; i++) sigma[s->metavars[i]] = cands[pick[i]];
    if (equal(normalize(subst_all(s->tmpl, sigma)), nphi)) return sigma;
    size_t i = k;
    while (i > 0 && ++pick[i - 1] == cands.size()) pick[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

}  // namespace lewis
