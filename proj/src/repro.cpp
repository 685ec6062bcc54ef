#include "lewis/repro.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "lewis/algebra.hpp"
#include "lewis/fixpoint.hpp"
#include "lewis/formula.hpp"
#include "lewis/ipc.hpp"
#include "lewis/kernel.hpp"
#include "lewis/kripke.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"
#include "lewis/search.hpp"
#include "lewis/stex.hpp"

namespace lewis {

namespace {

using Outcome = std::pair<bool, std::string>;

struct Suite {
  std::string dir;
  int jobs = 1;
  std::vector<ReproCheck> out;

  void run(int group, const std::string& id, const std::function<Outcome()>& body) {
    ReproCheck c;
    c.id = id;
    c.group = group;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = body();
      c.pass = ok;
      c.detail = detail;
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(c));
  }
};

std::string num(uint64_t v) { return std::to_string(v); }

// ------------------------------------------------------------- mutations --

// Whitespace tokens of the code portion of each line (comments dropped).
std::vector<std::vector<std::string>> script_tokens(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string code = line.substr(0, line.find('#'));
    std::istringstream ls(code);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    lines.push_back(std::move(toks));
  }
  return lines;
}

std::string assemble(const std::vector<std::vector<std::string>>& lines) {
  std::string out;
  for (const auto& toks : lines) {
    for (size_t i = 0; i < toks.size(); i++) {
      if (i) out += ' ';
      out += toks[i];
    }
    out += '\n';
  }
  return out;
}

bool script_accepted(const std::string& text) {
  try {
    return check_proof(parse_proof(text)).accepted;
  } catch (const std::exception&) {
    return false;
  }
}

struct MutationReport {
  uint64_t mutants = 0;
  uint64_t accepted = 0;
  std::string first_survivor;  // "<file>: token 'x' -> 'q0' at line k"
  bool base_ok = true;
};

void mutate_script(const std::string& file, const std::string& text, MutationReport* r) {
  auto lines = script_tokens(text);
  if (!script_accepted(assemble(lines))) {
    r->base_ok = false;
    return;
  }
  for (size_t li = 0; li < lines.size(); li++) {
    for (size_t ti = 0; ti < lines[li].size(); ti++) {
      std::string orig = lines[li][ti];
      lines[li][ti] = orig == "q0" ? "q1" : "q0";
      r->mutants++;
      if (script_accepted(assemble(lines))) {
        r->accepted++;
        if (r->first_survivor.empty())
          r->first_survivor = file + ": token '" + orig + "' at line " +
                              std::to_string(li + 1) + " survives";
      }
      lines[li][ti] = std::move(orig);
    }
  }
}

// ----------------------------------------------------------------- stex --

bool valid_on_frames(const std::vector<Frame>& frames, const Fml& phi) {
  return std::all_of(frames.begin(), frames.end(),
                     [&](const Frame& f) { return frame_validates(f, phi); });
}

}  // namespace

std::vector<ReproCheck> run_repro(const std::string& fixture_dir, int jobs) {
  Suite s;
  s.dir = fixture_dir;
  s.jobs = std::max(1, jobs);

  const std::string alg_file = fixture_dir + "/mace4-6elem.alg";

  // -- group 1: the shipped 6-element algebra ------------------------------
  s.run(1, "fixture-heyting", [&]() -> Outcome {
    Algebra a = load_mace4_file(alg_file);
    HeytingReport rep = verify_heyting(a);
    if (!rep.ok) return {false, rep.violations.front()};
    return {a.n == 6, num(a.n) + " elements; lattice and residuation laws hold"};
  });
  s.run(1, "fixture-ck-ct-ci", [&]() -> Outcome {
    Algebra a = load_mace4_file(alg_file);
    std::string why;
    if (!check_ck(a, &why)) return {false, "CK fails: " + why};
    if (!check_ct(a, &why)) return {false, "CT fails: " + why};
    if (!check_ci(a, &why)) return {false, "CI fails: " + why};
    return {true, "CK, CT, CI hold (216 triples each)"};
  });
  s.run(1, "fixture-4circa", [&]() -> Outcome {
    Algebra a = load_mace4_file(alg_file);
    bool ok = algebra_validates(a, atom_form("4circa"));
    return {ok, ok ? "4circa valid (36 valuations)" : "4circa refuted"};
  });
  s.run(1, "fixture-44circa", [&]() -> Outcome {
    Algebra a = load_mace4_file(alg_file);
    Fml f = atom_form("44circa");
    bool at_pinned = eval(a, {{"p", 2}, {"q", 4}, {"s", 3}}, f) != a.top;
    if (!at_pinned) return {false, "44circa not refuted at p=2, q=4, s=3"};
    return {!algebra_validates(a, f), "44circa refuted; counterexample p=2, q=4, s=3"};
  });
  s.run(1, "fixture-di", [&]() -> Outcome {
    Algebra a = load_mace4_file(alg_file);
    Fml f = atom_form("Di");
    bool at_pinned = eval(a, {{"p", 4}, {"q", 2}, {"s", 3}}, f) != a.top;
    if (!at_pinned) return {false, "Di not refuted at p=4, q=2, s=3"};
    return {!algebra_validates(a, f), "Di refuted; counterexample p=4, q=2, s=3"};
  });

  // -- group 2: scheme / frame-condition correspondences on all frames <= 4
  auto sweep = [&](const std::string& scheme, const std::string& cond) {
    std::string id = "sweep-" + scheme + "-" + cond;
    std::transform(id.begin(), id.end(), id.begin(),
                   [](char c) { return c == '_' ? '-' : char(std::tolower(c)); });
    s.run(2, id, [&, scheme, cond]() -> Outcome {
      SweepReport r = correspondence_sweep(scheme, cond, 4, s.jobs);
      if (!r.equivalent())
        return {false, num(r.holds_not_valid) + "+" + num(r.valid_not_holds) +
                           " discrepancies; first:\n" + r.discrepancy};
      return {r.frames == 1076484,
              num(r.frames) + " frames; " + num(r.holds_and_valid) +
                  " satisfy both sides; no discrepancy"};
    });
  };
  sweep("Box", "brilliant");
  sweep("4box", "semi_transitive");
  sweep("4sub", "gathering");
  sweep("S", "strong");
  sweep("P", "transitive_sub");
  sweep("4circa", "gather_transitive");
  sweep("W", "supergathering");

  // -- group 3: the two shipped countermodels plus one mined from scratch --
  s.run(3, "model-slimmesmurf", [&]() -> Outcome {
    Model m = load_model_file(fixture_dir + "/slimmesmurf.frame");
    for (const char* c : {"transitive_sub", "noetherian", "discrete"})
      if (!frame_condition(m.frame, c).holds) return {false, std::string(c) + " fails"};
    if (forces(m, m.frame.index("a"), parse("p => []p")))
      return {false, "p => []p not refuted at a"};
    for (const char* sc : {"P", "Lbox"})
      if (!frame_validates(m.frame, atom_form(sc)))
        return {false, std::string(sc) + " not frame-valid"};
    return {true, "3 worlds; refutes p => []p at a; frame validates P and Lbox"};
  });
  s.run(3, "model-querusmurf", [&]() -> Outcome {
    Model m = load_model_file(fixture_dir + "/querusmurf.frame");
    if (!frame_condition(m.frame, "supergathering").holds)
      return {false, "supergathering fails"};
    bool refuted = !forces(m, m.frame.index("a"), parse("(p => F) -> [](p => F)"));
    return {refuted, refuted ? "4 worlds, supergathering; refutes (p => F) -> [](p => F) at a"
                             : "target not refuted at a"};
  });
  s.run(3, "search-lbox-arrow", [&]() -> Outcome {
    FrameSearchReport r = find_frame_countermodel(parse("([]F => F) -> []F"),
                                                  {"noetherian", "gathering"}, 3, s.jobs);
    if (!r.witness) return {false, "no countermodel up to 3 worlds"};
    return {r.witness->model.frame.n == 3,
            "found: 3-world Noetherian gathering frame, fails at " + r.witness->world +
                " (" + num(r.frames_examined) + " frames examined)"};
  });

  // -- group 4: fixpoint equations over the whole catalog ------------------
  auto catalog = [&](const std::string& id, const std::string& what,
                     const std::vector<std::string>& conds, uint64_t classes,
                     uint64_t pairs) {
    s.run(4, id, [&, what, conds, classes, pairs]() -> Outcome {
      CatalogSweepReport r = sweep_catalog(what, conds, 4);
      if (r.failures)
        return {false, num(r.failures) + " failures; first: " + r.first_failure};
      bool ok = r.frames == classes && (pairs == 0 || r.pairs == pairs);
      return {ok, num(r.frames) + " frame classes, " + num(r.pairs) +
                      (what == "uniqueness" ? " guarded formulas, " : " pairs, ") +
                      num(r.checks) + " checks, 0 failures"};
    });
  };
  catalog("fixpoint-jv-noeth-gathering", "jv", {"noetherian", "gathering"}, 539, 75076);
  catalog("fixpoint-js-supergathering", "js", {"supergathering"}, 455, 75076);
  catalog("fixpoint-js-semi-transitive", "js",
          {"noetherian", "semi_transitive", "transitive_sub"}, 647, 75076);
  catalog("fixpoint-x-supergathering", "x", {"supergathering"}, 455, 75076);
  catalog("fixpoint-uniqueness", "uniqueness", {"noetherian", "semi_transitive"}, 790, 0);

  // -- group 5: the derivation catalog -------------------------------------
  s.run(5, "proofs-catalog", [&]() -> Outcome {
    auto entries = verify_catalog(fixture_dir + "/proofs");
    if (entries.size() != 8)
      return {false, "expected 8 scripts, found " + num(entries.size())};
    for (const auto& e : entries)
      if (!e.verdict.accepted)
        return {false, e.file + " rejected at line " + std::to_string(e.verdict.line) +
                           ": " + e.verdict.reason};
    return {true, "8 scripts accepted"};
  });
  s.run(5, "proofs-mutation", [&]() -> Outcome {
    auto entries = verify_catalog(fixture_dir + "/proofs");
    MutationReport mr;
    for (const auto& e : entries) {
      std::string path = fixture_dir + "/proofs/" + e.file;
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      mutate_script(e.file, buf.str(), &mr);
      if (!mr.base_ok) return {false, e.file + ": reassembled script rejected"};
    }
    if (mr.accepted) return {false, mr.first_survivor};
    return {true, num(mr.mutants) + " single-token mutants, all rejected"};
  });

  // -- group 6: stability under the strict-implication extension -----------
  s.run(6, "stex-schemes", [&]() -> Outcome {
    // Tr comes back as an exact instance.
    Fml tr = stex(atom_form("Tr"), "x");
    auto mtr = match_scheme(tr, "Tr");
    if (!mtr || !equal(scheme_instance("Tr", *mtr), tr))
      return {false, "stex image of Tr is not an exact Tr instance"};
    // Ka and La modulo the unit rewrites of normalize().
    for (const char* name : {"Ka", "La"}) {
      Fml img = stex(atom_form(name), "x");
      auto m = match_scheme(img, name);
      if (!m || !equal(normalize(scheme_instance(name, *m)), normalize(img)))
        return {false, std::string("stex image of ") + name + " does not match " + name};
    }
    // JS instances map to JS instances on the nose.
    const Fml r = mk_atom("r"), p = mk_atom("p");
    const std::vector<std::pair<Fml, Fml>> pairs = {
        {r, p}, {mk_and(r, p), p}, {mk_lewis(p, r), r}};
    for (const auto& [psi, chi] : pairs) {
      Fml inst = scheme_instance("JS", {{"%psi", psi}, {"%chi", chi}, {"%r", r}});
      Fml img = stex(inst, "x");
      auto m = match_scheme(img, "JS");
      if (!m || !equal(scheme_instance("JS", *m), img))
        return {false, "stex image of a JS instance is not a JS instance"};
    }
    return {true, "Tr exact; Ka, La modulo normalization; 3 JS instances structural"};
  });
  s.run(6, "stex-prefix-validity", [&]() -> Outcome {
    std::vector<Frame> frames;
    for (int n = 1; n <= 3; n++)
      enumerate_frames(n, {}, [&](const Frame& f) {
        frames.push_back(f);
        return true;
      });
    // The six originals whose stex images the previous check matched.  Only
    // those with an unconditionally frame-valid base carry the obligation.
    const Fml r = mk_atom("r"), p = mk_atom("p");
    std::vector<std::pair<std::string, Fml>> images = {
        {"Tr", atom_form("Tr")},
        {"Ka", atom_form("Ka")},
        {"La", atom_form("La")},
    };
    for (const auto& [psi, chi] : std::vector<std::pair<Fml, Fml>>{
             {r, p}, {mk_and(r, p), p}, {mk_lewis(p, r), r}})
      images.emplace_back(
          "JS", scheme_instance("JS", {{"%psi", psi}, {"%chi", chi}, {"%r", r}}));
    int guarded_count = 0;
    for (const auto& [name, base] : images) {
      if (!valid_on_frames(frames, base)) continue;
      guarded_count++;
      Fml img = mk_imp(mk_atom("x"), stex(base, "x"));
      if (!valid_on_frames(frames, img))
        return {false, "x -> stex(" + name + ") fails on some frame <= 3 worlds"};
    }
    return {guarded_count == 4,
            num(frames.size()) + " frames; " + std::to_string(guarded_count) +
                " of 6 bases frame-valid everywhere; their prefixed stex images too"};
  });

  // -- group 7: the propositional core --------------------------------------
  s.run(7, "ipc-curated", [&]() -> Outcome {
    const std::vector<std::pair<std::string, bool>> table = {
        {"((p -> q) -> p) -> p", false},
        {"~~p -> p", false},
        {"p | ~p", false},
        {"(p -> q) -> (~p | q)", false},
        {"~(p & q) -> (~p | ~q)", false},
        {"~~(p | ~p)", true},
        {"~~(((p -> q) -> p) -> p)", true},
        {"~~(~~p -> p)", true},
        {"p -> ~~p", true},
        {"~~~p -> ~p", true},
        {"(p -> q) -> ((q -> s) -> (p -> s))", true},
        {"~(p & ~p)", true},
        {"(~p | q) -> (p -> q)", true},
        {"~(p | q) <-> (~p & ~q)", true},
        {"((p & q) -> s) <-> (p -> (q -> s))", true},
    };
    for (const auto& [text, expected] : table) {
      Fml f = parse(text);
      if (ipc_valid(f) != expected) return {false, text + ": wrong verdict"};
      if (ipc_countermodel(f, 5).has_value() == expected)
        return {false, text + ": oracle disagrees"};
    }
    return {true, num(table.size()) + " formulas decided; 5-world oracle concurs"};
  });
  s.run(7, "ipc-oracle-agreement", [&]() -> Outcome {
    std::vector<Fml> corpus = ipc_corpus();
    int J = s.jobs;
    std::vector<uint64_t> bad(J, 0);
    auto work = [&](int w) {
      for (size_t i = w; i < corpus.size(); i += size_t(J))
        if (ipc_valid(corpus[i]) == ipc_countermodel(corpus[i], 5).has_value()) bad[w]++;
    };
    if (J == 1) {
      work(0);
    } else {
      std::vector<std::thread> ths;
      for (int w = 0; w < J; w++) ths.emplace_back(work, w);
      for (auto& t : ths) t.join();
    }
    uint64_t mism = 0;
    for (uint64_t b : bad) mism += b;
    if (mism) return {false, num(mism) + " prover/oracle disagreements"};
    return {corpus.size() == 2084,
            num(corpus.size()) + " formulas; prover and 5-world oracle agree"};
  });

  // -- extras: the algebra hunts and the open separation probe -------------
  s.run(0, "search-44circa", [&]() -> Outcome {
    AlgebraSearchReport r = find_algebra_countermodel(atom_form("44circa"), {"iA-", "4circa"}, 6);
    if (!r.witness) return {false, "no countermodel up to size 6"};
    bool ok = r.witness->n == 6 && r.exhausted_sizes == std::vector<int>{1, 2, 3, 4, 5};
    return {ok, "found at size 6; sizes 1-5 exhausted (" + num(r.algebras_examined) +
                    " algebras examined)"};
  });
  s.run(0, "search-di", [&]() -> Outcome {
    AlgebraSearchReport r = find_algebra_countermodel(atom_form("Di"), {"iA-", "4circa"}, 6);
    if (!r.witness) return {false, "no countermodel up to size 6"};
    bool ok = r.witness->n == 4 && r.exhausted_sizes == std::vector<int>{1, 2, 3};
    return {ok, "found at size 4; sizes 1-3 exhausted"};
  });
  s.run(0, "search-tr", [&]() -> Outcome {
    AlgebraSearchReport r = find_algebra_countermodel(atom_form("Tr"), {"iA-"}, 4);
    if (r.witness) return {false, "unexpected countermodel for an axiom"};
    bool ok = r.exhausted_sizes == std::vector<int>{1, 2, 3, 4};
    return {ok, "exhausted through size 4 (" + num(r.algebras_examined) + " algebras)"};
  });
  s.run(0, "open-js-vs-wcirc", [&]() -> Outcome {
    auto frames = frame_class_validating(4, {}, {atom_form("Wcirc")});
    CatalogSweepReport r = sweep_catalog_frames("js", frames);
    if (r.failures)
      return {false, "separation candidate: " + r.first_failure};
    return {frames.size() == 653,
            "exhausted: all catalog JS instances valid on the " + num(frames.size()) +
                " Wcirc-validating frame classes <= 4 worlds"};
  });

  return s.out;
}

std::string format_repro(const std::vector<ReproCheck>& checks, bool quiet) {
  size_t width = 8;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  std::ostringstream out;
  out << std::left << std::setw(int(width)) << "check"
      << "  result    time  detail\n";
  size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) failed++;
    if (quiet && c.pass) continue;
    char t[32];
    std::snprintf(t, sizeof t, "%7.2fs", c.seconds);
    out << std::left << std::setw(int(width)) << c.id << "  "
        << (c.pass ? "PASS  " : "FAIL  ") << t << "  " << c.detail << "\n";
  }
  out << failed << " of " << checks.size() << " checks failed\n";
  return out.str();
}

bool all_passed(const std::vector<ReproCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ReproCheck& c) { return c.pass; });
}

}  // namespace lewis
