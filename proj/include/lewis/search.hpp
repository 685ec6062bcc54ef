// Exhaustive small-model search: enumeration of all labeled frames/algebras
// up to a size cap, countermodel hunts, correspondence sweeps (scheme atom
// form vs. frame condition), and the fixpoint catalog sweeps.
//
// Everything here is deterministic: candidates are generated in a fixed
// lexicographic order (documented per entry point), and parallel runs merge
// worker results by candidate index, so reports never depend on thread
// scheduling.  Witnesses found by the bitmask evaluator are re-verified with
// the reference pointwise evaluator before being returned.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lewis/algebra.hpp"
#include "lewis/formula.hpp"
#include "lewis/kripke.hpp"

namespace lewis {

// ---------------------------------------------------------------- frames --

// Visits every labeled frame on exactly n worlds (named a, b, c, ...) whose
// relations satisfy the composition law and all named conditions.  Order:
// partial orders ascending by their pair bitmask; for each order, the sub
// relation is enumerated column-wise (the set { k | k sub m } ranges over
// the <=-downsets, ascending as masks, with the column for the last world
// changing fastest).  Return false from visit to stop.  Returns the number
// of frames visited.  Throws std::invalid_argument when n exceeds the cap
// ("cap exceeded") or a condition name is unknown.
uint64_t enumerate_frames(int n, const std::vector<std::string>& conditions,
                          const std::function<bool(const Frame&)>& visit,
                          int cap = 5);

// Relabeling-invariant key: the minimum over all world permutations of the
// (le, sub) row encoding.  Equal keys == isomorphic frames.
std::vector<uint32_t> frame_key(const Frame& f);

// One representative per isomorphism class among the frames with
// 1..max_worlds worlds satisfying the conditions, in enumeration order.
std::vector<Frame> frame_class(int max_worlds,
                               const std::vector<std::string>& conditions,
                               int cap = 5);

// As frame_class, additionally keeping only frames that validate every
// formula in `validating` (a semantic frame class, e.g. the frames of some
// axiom's atom form).
std::vector<Frame> frame_class_validating(int max_worlds,
                                          const std::vector<std::string>& conditions,
                                          const std::vector<Fml>& validating,
                                          int cap = 5);

struct FrameWitness {
  Model model;        // frame + refuting valuation
  std::string world;  // world where the target fails
};

struct FrameSearchReport {
  std::optional<FrameWitness> witness;
  uint64_t frames_examined = 0;      // frames meeting the conditions
  uint64_t valuations_examined = 0;  // (frame, valuation) pairs evaluated
};

// Scans sizes 1..max_worlds; within a size, frames in enumeration order; for
// each frame, valuations of atoms(target) by upsets (odometer, last atom
// fastest).  Returns the first (frame, valuation) refuting the target, with
// the failure world, re-checked by forces().  The report is identical for
// every jobs value; workers split the candidate space by partial order and
// the merge keeps the smallest candidate index.
FrameSearchReport find_frame_countermodel(const Fml& target,
                                          const std::vector<std::string>& conditions,
                                          int max_worlds, int jobs = 1, int cap = 5);

struct SweepReport {
  std::string scheme;
  std::string condition;
  int max_worlds = 0;
  uint64_t frames = 0;            // all frames of size 1..max_worlds
  uint64_t holds_and_valid = 0;   // condition holds, atom form valid
  uint64_t neither = 0;           // condition fails, atom form refuted
  uint64_t holds_not_valid = 0;   // discrepancy: condition without validity
  uint64_t valid_not_holds = 0;   // discrepancy: validity without condition
  std::string discrepancy;        // first discrepant frame, rendered as text
  bool equivalent() const { return holds_not_valid == 0 && valid_not_holds == 0; }
};

// Exhaustive biconditional check over every labeled frame with up to
// max_worlds worlds: frame_validates(atom_form(scheme)) iff the condition
// holds.  Both discrepancy counters stay 0 exactly when scheme and condition
// correspond on this size range.
SweepReport correspondence_sweep(const std::string& scheme,
                                 const std::string& condition, int max_worlds,
                                 int jobs = 1, int cap = 5);

// -------------------------------------------------------------- algebras --

// Visits every algebra on carrier {0..n-1} with bot = 0 and top = 1 (top = 0
// when n = 1) that passes verify_heyting and satisfies CK, CT and CI, plus
// any further named axioms: CD, or any scheme name (checked as atom-form
// validity; 4circa and CD prune during generation, other schemes filter
// complete tables).  Axiom-set names (iA-, iA, ...) expand to their schemes;
// CK/CT/CI may be named but are enforced regardless, since the generator
// builds lewis rows from their values on meet-irreducibles (every CK row is
// of that shape, so the stream is exhaustive).  Order: lattices ascending by
// the order bitmask on {2..n-1}; lewis tables row by row, each row by its
// meet-irreducible assignment, ascending.  Returns the number visited.
uint64_t enumerate_algebras(int n, const std::vector<std::string>& axioms,
                            const std::function<bool(const Algebra&)>& visit,
                            int cap = 6);

struct AlgebraSearchReport {
  std::optional<Algebra> witness;
  std::map<std::string, int> refuting_valuation;  // atoms -> elements
  std::vector<int> exhausted_sizes;  // sizes fully enumerated without a hit
  uint64_t algebras_examined = 0;
};

// Scans sizes 1..max_size in enumeration order and returns the first algebra
// satisfying the axioms on which the target's atom form is not valid,
// together with the first refuting valuation.  Exhausted smaller sizes make
// the witness size-minimal for the labeled enumeration.
AlgebraSearchReport find_algebra_countermodel(const Fml& target,
                                              const std::vector<std::string>& axioms,
                                              int max_size, int cap = 6);

// -------------------------------------------------- fixpoint catalog sweep --

struct CatalogSweepReport {
  std::string what;       // jv | js | x | uniqueness
  uint64_t pairs = 0;     // catalog pairs (chis for uniqueness) covered
  uint64_t frames = 0;    // isomorphism-class representatives swept
  uint64_t checks = 0;    // semantic checks performed after deduplication
  uint64_t failures = 0;
  std::string first_failure;  // "psi=..., chi=..." plus the frame, when any
};

// Validates, over one representative per isomorphism class of the frames
// with <= max_worlds worlds meeting the conditions:
//   jv          fixpoint_equation(JV) for every catalog pair
//   js          fixpoint_equation(JS) for every catalog pair
//   x           x_equation (JV/JS collapse) for every catalog pair
//   uniqueness  uniqueness_instance(chi, r, q) for every guarded catalog chi
// The equations are evaluated semantically (the denotation of a substitution
// instance is computed from the parts' denotations), which agrees with
// building the formula and calling frame_validates; tests pin that agreement.
CatalogSweepReport sweep_catalog(const std::string& what,
                                 const std::vector<std::string>& conditions,
                                 int max_worlds, int cap = 5);

// Same sweep over an explicit list of frames (already deduplicated or not;
// they are used as given).
CatalogSweepReport sweep_catalog_frames(const std::string& what,
                                        const std::vector<Frame>& frames);

}  // namespace lewis
