// Finite Lewisian Kripke frames and models.
//
// A frame is a set of worlds with a partial order <= (the intuitionistic
// order) and a second relation < (written sub below) obeying the law
// k <= l < m  ==>  k < m.  Relations are stored as per-world successor
// bitmasks, so frames are capped at 31 worlds (far beyond anything the
// sweeps enumerate).
//
// Forcing is intuitionistic over <= with the strict-implication clause
//   w ||- a => b   iff   every sub-successor of w forcing a forces b.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lewis/algebra.hpp"
#include "lewis/formula.hpp"

namespace lewis {

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Frame {
  int n = 0;
  std::vector<std::string> names;  // world names in index order
  std::vector<uint32_t> le;        // le[w]  = { v | w <= v }, reflexive
  std::vector<uint32_t> sub;       // sub[w] = { v | w <  v } (verbatim, not closed)

  uint32_t full() const { return (1u << n) - 1; }
  int index(const std::string& name) const;  // -1 when unknown
};

struct Model {
  Frame frame;
  std::map<std::string, uint32_t> val;  // atom -> upset mask
};

// Closes leq generators reflexively-transitively, verifies antisymmetry and
// the composition law (naming the witnessing pair/triple on failure), and
// takes sub verbatim.
Frame validate_frame(const std::vector<std::string>& worlds,
                     const std::vector<std::pair<std::string, std::string>>& leq,
                     const std::vector<std::pair<std::string, std::string>>& sub);

// Line-based text format, '#' comments:
//   worlds: a b c
//   leq: b<=c c<=d          (generators; closure is applied)
//   sub: a<b a<c
//   val p: b d              (must be an upset)
Model parse_model(const std::string& text);
Model load_model_file(const std::string& path);
std::string to_text(const Model& m);  // round-trips through parse_model

// Reference pointwise evaluator.  Atoms without a valuation entry are false
// everywhere; their names are appended to *warn when given.
bool forces(const Model& m, int w, const Fml& phi, std::vector<std::string>* warn = nullptr);

// Mask of worlds forcing phi (bitmask evaluator used by the sweeps).
uint32_t eval_mask(const Frame& f, const std::map<std::string, uint32_t>& val,
                   const Fml& phi);

bool model_validates(const Model& m, const Fml& phi);

// All <=-upsets, ascending as masks (so index 0 is the empty set and the last
// entry is the full carrier).
std::vector<uint32_t> upsets(const Frame& f);

// phi forced at every world under every assignment of atoms(phi) to upsets.
bool frame_validates(const Frame& f, const Fml& phi);

// Formula compiled to a flat instruction list with shared subterms, for the
// inner loops of frame_validates and the search sweeps.
struct CompiledFormula {
  struct Ins {
    Op op;
    int a = -1, b = -1;  // operand instruction indices
    int atom = -1;       // index into atom_names for Op::Atom
  };
  std::vector<Ins> ins;                 // topological order; result is ins.back()
  std::vector<std::string> atom_names;  // sorted, deduplicated
};
CompiledFormula compile_formula(const Fml& phi);
// atom_masks[i] is the valuation of atom_names[i].
uint32_t eval_compiled(const Frame& f, const CompiledFormula& cf,
                       const uint32_t* atom_masks);

struct ConditionResult {
  bool holds = true;
  std::vector<int> witness;  // first violating tuple of world indices
};

// lewis, brilliant, semi_transitive, gathering, noetherian, supergathering,
// strong, transitive_sub, gather_transitive, discrete.
const std::vector<std::string>& condition_names();
// Throws FrameError on an unknown condition name.
ConditionResult frame_condition(const Frame& f, const std::string& condition);
// Checker resolved once, for enumeration inner loops; FrameError on unknown.
using ConditionFn = ConditionResult (*)(const Frame&);
ConditionFn condition_fn(const std::string& condition);

// Frame classes under which each named scheme's atom form is valid (the
// sound direction of the correspondence table; an absent entry / empty list
// means every frame).  Used for soundness spot-checks of derivations.
const std::map<std::string, std::vector<std::string>>& scheme_frame_classes();

// Upset algebra with the induced lewis table; passes verify_heyting and
// validates CK/CT/CI/CD.
Algebra dual_algebra(const Frame& f);

// Index of the upset mask in upsets(f) (for tests relating the two views).
int upset_index(const Frame& f, uint32_t mask);

}  // namespace lewis
