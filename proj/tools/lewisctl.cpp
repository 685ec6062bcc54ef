// Command-line surface over the library: formula utilities, model/frame/
// algebra checks, countermodel search, proof checking, and the one-shot
// reproduction suite.
//
// Exit codes: 0 success, 1 a requested check failed (or a search was
// exhausted), 2 usage or input-format errors.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lewis/algebra.hpp"
#include "lewis/fixpoint.hpp"
#include "lewis/formula.hpp"
#include "lewis/ipc.hpp"
#include "lewis/kernel.hpp"
#include "lewis/kripke.hpp"
#include "lewis/parser.hpp"
#include "lewis/repro.hpp"
#include "lewis/schemes.hpp"
#include "lewis/search.hpp"

namespace {

using namespace lewis;

std::vector<std::string> split_csv(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& chunk : raw) {
    size_t start = 0;
    while (start <= chunk.size()) {
      size_t comma = chunk.find(',', start);
      if (comma == std::string::npos) comma = chunk.size();
      if (comma > start) out.push_back(chunk.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return out;
}

// A scheme name stands for its atom form; anything else is parsed as a formula.
Fml resolve_target(const std::string& text) {
  if (find_scheme(text)) return atom_form(text);
  return parse(text);
}

// First refuting valuation in odometer order (atoms sorted, last one fastest).
std::string first_refutation(const Algebra& a, const Fml& f) {
  std::vector<std::string> vars = atoms(f);
  std::vector<int> pick(vars.size(), 0);
  while (true) {
    std::map<std::string, int> v;
    for (size_t i = 0; i < vars.size(); i++) v[vars[i]] = pick[i];
    if (eval(a, v, f) != a.top) {
      std::string out;
      for (size_t i = 0; i < vars.size(); i++)
        out += (i ? ", " : "") + vars[i] + " = " + std::to_string(pick[i]);
      return out.empty() ? "refuted (closed formula)" : "refuted at " + out;
    }
    size_t i = vars.size();
    if (i == 0) return "not refuted";
    while (i > 0 && ++pick[i - 1] == a.n) pick[--i] = 0;
    if (i == 0) return "not refuted";
  }
}

// One algebra axiom name: the defining equations by their own names, a scheme
// (atom-form validity), or an axiom-set name expanding to schemes.
bool algebra_axiom_holds(const Algebra& a, const std::string& name, std::string* why) {
  if (name == "CK") return check_ck(a, why);
  if (name == "CT") return check_ct(a, why);
  if (name == "CI") return check_ci(a, why);
  if (name == "CD") return check_cd(a, why);
  if (find_scheme(name)) {
    if (algebra_validates(a, atom_form(name))) return true;
    *why = first_refutation(a, atom_form(name));
    return false;
  }
  for (const std::string& sc : resolve_axiom_set(name).schemes)
    if (!algebra_axiom_holds(a, sc, why)) {
      *why = sc + ": " + *why;
      return false;
    }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for intuitionistic strict-implication logics"};
  app.require_subcommand(1);
  int rc = 0;

  // parse ------------------------------------------------------------------
  std::string parse_text;
  bool parse_tmpl = false;
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print its canonical form");
  cmd_parse->add_option("formula", parse_text, "formula text")->required();
  cmd_parse->add_flag("--template", parse_tmpl, "allow %metavariables");
  cmd_parse->callback([&] {
    Fml f = parse_tmpl ? parse_template(parse_text) : parse(parse_text);
    std::cout << to_string(f) << "\n";
  });

  // fixpoint ----------------------------------------------------------------
  std::string fx_kind = "js", fx_psi, fx_chi, fx_var = "r";
  auto* cmd_fix = app.add_subcommand("fixpoint", "explicit fixpoint for psi => chi in --var");
  cmd_fix->add_option("--kind", fx_kind, "jv | js")->check(CLI::IsMember({"jv", "js"}));
  cmd_fix->add_option("--psi", fx_psi, "left component")->required();
  cmd_fix->add_option("--chi", fx_chi, "right component")->required();
  cmd_fix->add_option("--var", fx_var, "designated variable (default r)");
  cmd_fix->callback([&] {
    FixpointProblem p{parse(fx_psi), parse(fx_chi), fx_var,
                      fx_kind == "jv" ? FixKind::JV : FixKind::JS};
    Fml theta = fx_kind == "jv" ? jv_fixpoint(p) : js_fixpoint(p);
    std::cout << to_string(theta) << "\n";
    std::cout << "equation: " << to_string(fixpoint_equation(p)) << "\n";
  });

  // check-model --------------------------------------------------------------
  std::string cm_file, cm_formula, cm_world;
  auto* cmd_cm = app.add_subcommand("check-model", "evaluate a formula on a model file");
  cmd_cm->add_option("file", cm_file, "model file")->required();
  cmd_cm->add_option("--formula", cm_formula, "formula to evaluate");
  cmd_cm->add_option("--world", cm_world, "check forcing at one world only");
  cmd_cm->callback([&] {
    Model m = load_model_file(cm_file);
    if (cm_formula.empty()) {
      std::cout << to_text(m) << "model ok: " << m.frame.n << " worlds\n";
      return;
    }
    Fml f = parse(cm_formula);
    if (!cm_world.empty()) {
      int w = m.frame.index(cm_world);
      if (w < 0) throw FrameError("unknown world: " + cm_world);
      bool ok = forces(m, w, f);
      std::cout << (ok ? "forced at " : "not forced at ") << cm_world << "\n";
      rc = ok ? 0 : 1;
      return;
    }
    for (int w = 0; w < m.frame.n; w++)
      if (!forces(m, w, f)) {
        std::cout << "fails at " << m.frame.names[w] << "\n";
        rc = 1;
        return;
      }
    std::cout << "valid on the model\n";
  });

  // check-frame ---------------------------------------------------------------
  std::string cf_file;
  std::vector<std::string> cf_conds;
  auto* cmd_cf = app.add_subcommand("check-frame", "test frame conditions on a model file");
  cmd_cf->add_option("file", cf_file, "model/frame file")->required();
  cmd_cf->add_option("--condition", cf_conds, "condition name(s), comma-separable")->required();
  cmd_cf->callback([&] {
    Model m = load_model_file(cf_file);
    for (const std::string& c : split_csv(cf_conds)) {
      ConditionResult r = frame_condition(m.frame, c);
      std::cout << c << ": " << (r.holds ? "holds" : "fails at");
      for (int w : r.witness) std::cout << " " << m.frame.names[w];
      std::cout << "\n";
      if (!r.holds) rc = 1;
    }
  });

  // algebra verify -------------------------------------------------------------
  auto* cmd_alg = app.add_subcommand("algebra", "finite algebra operations");
  cmd_alg->require_subcommand(1);
  std::string av_file;
  std::vector<std::string> av_axioms, av_refute;
  auto* cmd_av = cmd_alg->add_subcommand("verify", "check axioms / refutations on a Mace4 file");
  cmd_av->add_option("file", av_file, "Mace4 interpretation file")->required();
  cmd_av->add_option("--axioms", av_axioms, "axioms that must hold (comma-separable)");
  cmd_av->add_option("--refute", av_refute, "schemes/formulas that must fail (comma-separable)");
  cmd_av->callback([&] {
    Algebra a = load_mace4_file(av_file);
    std::cout << "loaded: " << a.n << " elements, heyting laws ok\n";
    for (const std::string& name : split_csv(av_axioms)) {
      std::string why;
      bool ok = algebra_axiom_holds(a, name, &why);
      std::cout << "axiom " << name << ": " << (ok ? "holds" : "FAILS (" + why + ")") << "\n";
      if (!ok) rc = 1;
    }
    for (const std::string& name : split_csv(av_refute)) {
      Fml f = resolve_target(name);
      bool refuted = !algebra_validates(a, f);
      std::cout << "refute " << name << ": "
                << (refuted ? first_refutation(a, f) : "NOT refuted") << "\n";
      if (!refuted) rc = 1;
    }
  });

  // search ----------------------------------------------------------------------
  std::string se_mode, se_refute;
  std::vector<std::string> se_require;
  int se_max = 0, se_jobs = 1, se_cap = 0;
  auto* cmd_se = app.add_subcommand("search", "hunt a countermodel among small frames/algebras");
  cmd_se->add_option("--mode", se_mode, "frames | algebras")
      ->required()
      ->check(CLI::IsMember({"frames", "algebras"}));
  cmd_se->add_option("--refute", se_refute, "target: scheme name or formula")->required();
  cmd_se->add_option("--require", se_require, "frame conditions / algebra axioms (comma-separable)");
  cmd_se->add_option("--max", se_max, "largest size to try")->required();
  cmd_se->add_option("--jobs", se_jobs, "worker threads (frame mode)");
  cmd_se->add_option("--cap", se_cap, "raise the size cap (default: 5 frames, 6 algebras)");
  cmd_se->callback([&] {
    Fml target = resolve_target(se_refute);
    std::vector<std::string> req = split_csv(se_require);
    if (se_mode == "frames") {
      int cap = se_cap ? se_cap : 5;
      FrameSearchReport r = find_frame_countermodel(target, req, se_max, se_jobs, cap);
      std::cout << "frames examined: " << r.frames_examined
                << ", valuations: " << r.valuations_examined << "\n";
      if (!r.witness) {
        std::cout << "exhausted: no countermodel up to " << se_max << " worlds\n";
        rc = 1;
        return;
      }
      std::cout << "found: " << r.witness->model.frame.n << "-world countermodel\n"
                << to_text(r.witness->model) << "fails at: " << r.witness->world << "\n";
    } else {
      int cap = se_cap ? se_cap : 6;
      AlgebraSearchReport r = find_algebra_countermodel(target, req, se_max, cap);
      std::cout << "algebras examined: " << r.algebras_examined << "\n";
      if (!r.witness) {
        std::cout << "exhausted: no countermodel up to size " << se_max << "\n";
        rc = 1;
        return;
      }
      std::cout << "found: size " << r.witness->n << " (sizes";
      for (int s : r.exhausted_sizes) std::cout << " " << s;
      std::cout << " exhausted)\n" << to_mace4(*r.witness);
      std::cout << "refuting valuation:";
      for (const auto& [atom, val] : r.refuting_valuation)
        std::cout << " " << atom << " = " << val;
      std::cout << "\n";
    }
  });

  // prove -------------------------------------------------------------------------
  std::string pr_file, pr_dir;
  auto* cmd_pr = app.add_subcommand("prove", "check a derivation script (or a catalog)");
  cmd_pr->add_option("file", pr_file, "proof script");
  cmd_pr->add_option("--catalog", pr_dir, "check every *.proof under a directory");
  cmd_pr->callback([&] {
    if (pr_file.empty() == pr_dir.empty())
      throw CLI::ValidationError("prove", "pass exactly one of <file> or --catalog");
    if (!pr_dir.empty()) {
      auto entries = verify_catalog(pr_dir);
      for (const auto& e : entries) {
        std::cout << e.file << ": "
                  << (e.verdict.accepted ? "accepted" : "rejected (" + e.verdict.reason + ")")
                  << "\n";
        if (!e.verdict.accepted) rc = 1;
      }
      if (entries.empty()) {
        std::cout << "no proof scripts found\n";
        rc = 1;
      }
      return;
    }
    ProofScript s = load_proof_file(pr_file);
    Verdict v = check_proof(s);
    if (v.accepted) {
      std::cout << "accepted: " << to_string(s.goal) << " in " << s.axioms.name << "\n";
    } else {
      std::cout << "rejected at line " << v.line << ": " << v.reason << "\n";
      rc = 1;
    }
  });

  // reproduce ------------------------------------------------------------------------
  std::string rp_dir = LEWIS_FIXTURE_DIR;
  int rp_jobs = 1;
  bool rp_quiet = false;
  auto* cmd_rp = app.add_subcommand("reproduce", "run the full reproduction suite");
  cmd_rp->add_option("--fixtures", rp_dir, "fixture directory");
  cmd_rp->add_option("--jobs", rp_jobs, "worker threads for searches and sweeps");
  cmd_rp->add_flag("--quiet", rp_quiet, "print failing rows only");
  cmd_rp->callback([&] {
    std::vector<ReproCheck> checks = run_repro(rp_dir, rp_jobs);
    std::cout << format_repro(checks, rp_quiet);
    rc = all_passed(checks) ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
