// Formula AST for intuitionistic propositional logic extended with a binary
// strict implication ("Lewis arrow", written => in the concrete syntax).
//
// Trees are immutable and shared; all constructors return shared_ptr<const Formula>.
// The box modality is not a node: [] a is represented as T => a, and [.] a as
// a & (T => a), so every algorithm downstream only ever sees the seven kinds below.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lewis {

enum class Op : uint8_t { Bot, Top, Atom, And, Or, Imp, Lewis };

struct Formula;
using Fml = std::shared_ptr<const Formula>;

struct Formula {
  Op op;
  std::string atom;  // Op::Atom only
  Fml lhs, rhs;      // binary ops only
};

Fml bot();
Fml top();
Fml mk_atom(const std::string& name);
Fml mk_and(Fml a, Fml b);
Fml mk_or(Fml a, Fml b);
Fml mk_imp(Fml a, Fml b);
Fml mk_lewis(Fml a, Fml b);

// Sugar, expanded on construction.
Fml mk_box(Fml a);            // T => a
Fml mk_boxdot(Fml a);         // a & (T => a)
Fml mk_neg(Fml a);            // a -> F
Fml mk_iff(Fml a, Fml b);     // (a -> b) & (b -> a)

// Total structural order (used for canonical sorting) and equality.
int cmp(const Fml& a, const Fml& b);
bool equal(const Fml& a, const Fml& b);

struct FmlLess {
  bool operator()(const Fml& a, const Fml& b) const { return cmp(a, b) < 0; }
};

// Canonical text form; parse(to_string(f)) == f.
std::string to_string(const Fml& f);

// Capture-free substitution of an atom by a formula (atoms are never binders).
Fml substitute(const Fml& f, const std::string& var, const Fml& repl);

std::vector<std::string> atoms(const Fml& f);  // sorted, deduplicated
bool contains_atom(const Fml& f, const std::string& var);

// True when every occurrence of var sits inside some Lewis subterm.
bool guarded(const Fml& f, const std::string& var);

int connective_count(const Fml& f);  // binary connectives only

size_t node_count(const Fml& f);

}  // namespace lewis
