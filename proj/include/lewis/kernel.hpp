// Hilbert-style proof checker: derivations over a chosen axiom set, closed
// under modus ponens, the rule Na (from A -> B infer A => B), and
// intuitionistic consequence (cited lines, with strict subterms abstracted
// to fresh atoms, must IPC-entail the stated line).
//
// Script file format, one statement per line, '#' starts a comment:
//
//   logic: iA- + W
//   goal: ([]p -> p) => p
//   1. p -> p                                ; ipc
//   2. p => p                                ; na 1
//   3. ((p => p) & (p => p)) -> (p => p)     ; ax Tr {%phi := p, ...}
//   4. ([]p -> p) => p                       ; mp 2 3
//
// Justifications: `ax <scheme> {%v := f, ...}` | `mp i j` (line j must be
// line i -> this line) | `na i` | `ipc i,j,...` (no citations = tautology).
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lewis/formula.hpp"

namespace lewis {

struct ProofError : std::runtime_error {
  explicit ProofError(const std::string& m) : std::runtime_error(m) {}
};

struct AxiomSet {
  std::string name;                // normalized display name
  std::set<std::string> schemes;
};

// `text` is a '+'-separated list; each component is a base set (iA- = Tr,Ka;
// iA = Tr,Ka,Di), one of the aliases iGLa- (iA- + La), iGLW- (iA- + W),
// iGLP- (iA- + Lbox + P), iGLWcirc- (iA- + Wcirc), iGLacirc- (iA- + Lcirca),
// or a scheme name from the registry.  Throws ProofError on anything else.
AxiomSet resolve_axiom_set(const std::string& text);

struct Justification {
  enum class Kind { Ax, MP, Na, IPC } kind = Kind::IPC;
  std::string scheme;                // Ax
  std::map<std::string, Fml> sigma;  // Ax
  std::vector<int> refs;             // MP: {i, j}; Na: {i}; IPC: cited lines
};

struct ProofLine {
  int index = 0;  // as written; must be strictly increasing
  Fml formula;
  Justification just;
};

struct ProofScript {
  AxiomSet axioms;
  Fml goal;
  std::vector<ProofLine> lines;
};

ProofScript parse_proof(const std::string& text);
ProofScript load_proof_file(const std::string& path);

struct Verdict {
  bool accepted = false;
  int line = 0;        // written index of the first failing line; 0 = script-level
  std::string reason;  // "accepted" or the failure
};

// Pure function of the script; stops at the first failing line.
Verdict check_proof(const ProofScript& s);

struct CatalogEntry {
  std::string file;   // basename
  std::string logic;
  std::string goal;   // printed formula (empty when the file fails to parse)
  Verdict verdict;
};

// Checks every *.proof file under dir, in filename order.  Files that fail
// to parse yield rejected entries rather than exceptions.
std::vector<CatalogEntry> verify_catalog(const std::string& dir);

}  // namespace lewis
