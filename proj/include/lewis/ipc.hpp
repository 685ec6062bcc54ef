// Intuitionistic propositional validity via a contraction-free sequent
// calculus (G4ip), plus a bounded rooted-Kripke-model oracle used to
// cross-check it, and the strict-subterm abstraction that lets the proof
// kernel treat Lewis formulas as IPC atoms.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lewis/formula.hpp"

namespace lewis {

struct AbstractedFormula {
  Fml body;  // Lewis-free
  std::vector<std::pair<std::string, Fml>> table;  // fresh atom -> Lewis subterm
};

// Replace every maximal Lewis subterm by a fresh atom (_L1, _L2, ... in
// first-occurrence order); identical subterms share an atom.
AbstractedFormula abstract_strict(const Fml& phi);

// Shared abstraction over several formulas (identical Lewis subterms across
// the inputs map to one atom).  Output order matches the input.
std::vector<Fml> abstract_strict_shared(const std::vector<Fml>& phis,
                                        std::vector<std::pair<std::string, Fml>>* table = nullptr);

// True iff phi is an IPC theorem.  Throws std::invalid_argument when phi
// contains a Lewis node (callers abstract first).
bool ipc_valid(const Fml& phi);

// Rooted intuitionistic Kripke model; world 0 is the root.
struct IpcModel {
  int n = 0;
  std::vector<uint32_t> le;              // le[w] = { v | w <= v }
  std::map<std::string, uint32_t> val;   // upset masks
};

// First (in a fixed enumeration order) rooted model with at most max_worlds
// worlds refuting phi at its root, re-verified by direct forcing evaluation
// before being returned.  No Lewis nodes allowed.
std::optional<IpcModel> ipc_countermodel(const Fml& phi, int max_worlds);

bool ipc_forces(const IpcModel& m, int w, const Fml& phi);

// Kripke-sem frame text format restricted to the intuitionistic order.
std::string to_text(const IpcModel& m);

// Deterministic Lewis-free corpus over the atoms p, q used by the
// agreement tests: every formula with at most 2 connectives over leaves
// {p, q, F, T}, plus `sample_per_size` pseudorandomly built formulas (fixed
// seed) for each connective count 3..max_connectives.
std::vector<Fml> ipc_corpus(int max_connectives = 6, int sample_per_size = 220);

}  // namespace lewis
