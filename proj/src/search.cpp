#include "lewis/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lewis/fixpoint.hpp"
#include "lewis/kernel.hpp"
#include "lewis/schemes.hpp"

namespace lewis {

namespace {

// ---------------------------------------------------------------- frames --

std::vector<std::string> world_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; i++) out.push_back(std::string(1, char('a' + i)));
  return out;
}

// All partial orders on {0..n-1} as reflexive up-masks (le[i] = { j | i<=j }),
// ascending by the bitmask over the off-diagonal pairs.
std::vector<std::vector<uint32_t>> poset_tables(int n) {
  std::vector<std::pair<int, int>> bits;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (i != j) bits.push_back({i, j});
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> le(n);
  for (uint64_t mask = 0; mask < (1ull << bits.size()); mask++) {
    for (int i = 0; i < n; i++) le[i] = 1u << i;
    for (size_t b = 0; b < bits.size(); b++)
      if ((mask >> b) & 1u) le[bits[b].first] |= 1u << bits[b].second;
    bool ok = true;
    for (int i = 0; ok && i < n; i++)
      for (int j = 0; ok && j < n; j++) {
        if (i == j || !((le[i] >> j) & 1u)) continue;
        if ((le[j] >> i) & 1u) ok = false;      // antisymmetry
        else if (le[j] & ~le[i]) ok = false;    // transitivity
      }
    if (ok) out.push_back(le);
  }
  return out;
}

// <=-downsets of the order (S with k <= l, l in S  =>  k in S), ascending.
std::vector<uint32_t> downset_masks(const std::vector<uint32_t>& le, int n) {
  std::vector<uint32_t> out;
  uint32_t full = (1u << n) - 1;
  for (uint32_t s = 0;; s++) {
    bool ok = true;
    for (int k = 0; ok && k < n; k++)
      if (!((s >> k) & 1u) && (le[k] & s)) ok = false;
    if (ok) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

std::vector<ConditionFn> resolve_conditions(const std::vector<std::string>& names) {
  std::vector<ConditionFn> out;
  for (const auto& c : names) {
    try {
      out.push_back(condition_fn(c));
    } catch (const FrameError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  return out;
}

bool conditions_hold(const Frame& f, const std::vector<ConditionFn>& conds) {
  for (auto fn : conds)
    if (!fn(f).holds) return false;
  return true;
}

void require_cap(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
  if (n > cap)
    throw std::invalid_argument("cap exceeded: " + std::to_string(n) + " " +
                                what + " > cap " + std::to_string(cap));
}

// Every frame over the given order, conditions applied; fn returns false to
// stop.  Returns false when stopped.  f must be pre-sized to n worlds.
template <typename Fn>
bool frames_of_poset(Frame& f, const std::vector<uint32_t>& le,
                     const std::vector<ConditionFn>& conds, Fn&& fn) {
  const int n = f.n;
  f.le = le;
  std::vector<uint32_t> ds = downset_masks(le, n);
  std::vector<size_t> pick(n, 0);
  for (;;) {
    for (int k = 0; k < n; k++) f.sub[k] = 0;
    for (int m = 0; m < n; m++) {
      uint32_t col = ds[pick[m]];
      for (int k = 0; k < n; k++)
        if ((col >> k) & 1u) f.sub[k] |= 1u << m;
    }
    if (conditions_hold(f, conds) && !fn(static_cast<const Frame&>(f))) return false;
    int i = n;
    while (i > 0 && ++pick[i - 1] == ds.size()) pick[--i] = 0;
    if (i == 0) return true;
  }
}

// Ascending upset masks, into a reused buffer (same order as upsets()).
void upsets_into(const Frame& f, std::vector<uint32_t>& out) {
  out.clear();
  uint32_t full = f.full();
  for (uint32_t s = 0;; s++) {
    bool ok = true;
    for (int w = 0; ok && w < f.n; w++)
      if (((s >> w) & 1u) && (f.le[w] & ~s)) ok = false;
    if (ok) out.push_back(s);
    if (s == full) break;
  }
}

struct ValScan {
  bool valid = true;
  std::vector<uint32_t> masks;  // failing assignment (on !valid)
  uint32_t result = 0;          // mask of worlds forcing the target there
  uint64_t tried = 0;
};

// Assignments of the compiled formula's atoms to upsets, odometer with the
// last atom fastest; stops at the first failure.
ValScan scan_valuations(const Frame& f, const CompiledFormula& cf,
                        const std::vector<uint32_t>& ups) {
  ValScan r;
  const size_t k = cf.atom_names.size();
  const uint32_t full = f.full();
  std::vector<size_t> pick(k, 0);
  std::vector<uint32_t> masks(k, ups.empty() ? 0 : ups[0]);
  for (;;) {
    r.tried++;
    uint32_t got = eval_compiled(f, cf, masks.data());
    if (got != full) {
      r.valid = false;
      r.masks = masks;
      r.result = got;
      return r;
    }
    size_t i = k;
    while (i > 0) {
      if (++pick[i - 1] < ups.size()) {
        masks[i - 1] = ups[pick[i - 1]];
        break;
      }
      pick[i - 1] = 0;
      masks[i - 1] = ups[0];
      i--;
    }
    if (i == 0) return r;
  }
}

void run_workers(int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errs(jobs);
  for (int t = 0; t < jobs; t++)
    threads.emplace_back([&, t] {
      try {
        body(t);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

std::string frame_text(const Frame& f) { return to_text(Model{f, {}}); }

}  // namespace

uint64_t enumerate_frames(int n, const std::vector<std::string>& conditions,
                          const std::function<bool(const Frame&)>& visit, int cap) {
  require_cap(n, cap, "worlds");
  auto conds = resolve_conditions(conditions);
  Frame f;
  f.n = n;
  f.names = world_names(n);
  f.le.resize(n);
  f.sub.resize(n);
  uint64_t count = 0;
  for (const auto& le : poset_tables(n)) {
    bool go_on = frames_of_poset(f, le, conds, [&](const Frame& g) {
      count++;
      return visit(g);
    });
    if (!go_on) break;
  }
  return count;
}

std::vector<uint32_t> frame_key(const Frame& f) {
  const int n = f.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint32_t> best, enc(2 * n);
  do {
    for (int i = 0; i < n; i++) {
      uint32_t l = 0, s = 0;
      for (int j = 0; j < n; j++) {
        if ((f.le[i] >> j) & 1u) l |= 1u << perm[j];
        if ((f.sub[i] >> j) & 1u) s |= 1u << perm[j];
      }
      enc[2 * perm[i]] = l;
      enc[2 * perm[i] + 1] = s;
    }
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), uint32_t(n));
  return best;
}

std::vector<Frame> frame_class(int max_worlds,
                               const std::vector<std::string>& conditions, int cap) {
  return frame_class_validating(max_worlds, conditions, {}, cap);
}

std::vector<Frame> frame_class_validating(int max_worlds,
                                          const std::vector<std::string>& conditions,
                                          const std::vector<Fml>& validating,
                                          int cap) {
  require_cap(max_worlds, cap, "worlds");
  std::vector<CompiledFormula> cfs;
  for (const auto& phi : validating) cfs.push_back(compile_formula(phi));
  std::vector<Frame> reps;
  std::set<std::vector<uint32_t>> seen;
  std::vector<uint32_t> ups;
  for (int n = 1; n <= max_worlds; n++) {
    enumerate_frames(
        n, conditions,
        [&](const Frame& g) {
          if (!cfs.empty()) {
            upsets_into(g, ups);
            for (const auto& cf : cfs)
              if (!scan_valuations(g, cf, ups).valid) return true;
          }
          if (seen.insert(frame_key(g)).second) reps.push_back(g);
          return true;
        },
        cap);
  }
  return reps;
}

FrameSearchReport find_frame_countermodel(const Fml& target,
                                          const std::vector<std::string>& conditions,
                                          int max_worlds, int jobs, int cap) {
  require_cap(max_worlds, cap, "worlds");
  auto conds = resolve_conditions(conditions);
  CompiledFormula cf = compile_formula(target);
  FrameSearchReport rep;

  struct Hit {
    size_t poset = 0;
    Frame frame;
    std::vector<uint32_t> masks;
    int world = 0;
  };

  for (int n = 1; n <= max_worlds; n++) {
    auto posets = poset_tables(n);
    const int J = jobs <= 1 ? 1 : jobs;
    std::vector<uint64_t> pframes(posets.size(), 0), pvals(posets.size(), 0);
    std::vector<std::optional<Hit>> hits(J);
    std::atomic<size_t> best{posets.size()};

    run_workers(J, [&](int t) {
      Frame f;
      f.n = n;
      f.names = world_names(n);
      f.le.resize(n);
      f.sub.resize(n);
      std::vector<uint32_t> ups;
      for (size_t pi = size_t(t); pi < posets.size(); pi += size_t(J)) {
        if (pi > best.load(std::memory_order_relaxed)) continue;
        uint64_t fr = 0, va = 0;
        frames_of_poset(f, posets[pi], conds, [&](const Frame& g) {
          fr++;
          upsets_into(g, ups);
          ValScan s = scan_valuations(g, cf, ups);
          va += s.tried;
          if (s.valid) return true;
          int w = std::countr_one(s.result);
          hits[t] = Hit{pi, g, s.masks, w};
          size_t cur = best.load();
          while (pi < cur && !best.compare_exchange_weak(cur, pi)) {
          }
          return false;
        });
        pframes[pi] = fr;
        pvals[pi] = va;
      }
    });

    const Hit* win = nullptr;
    for (const auto& h : hits)
      if (h && (!win || h->poset < win->poset)) win = &*h;
    if (win) {
      for (size_t pi = 0; pi <= win->poset; pi++) {
        rep.frames_examined += pframes[pi];
        rep.valuations_examined += pvals[pi];
      }
      Model m;
      m.frame = win->frame;
      for (size_t i = 0; i < cf.atom_names.size(); i++)
        m.val[cf.atom_names[i]] = win->masks[i];
      if (forces(m, win->world, target))
        throw std::logic_error("search witness failed pointwise re-verification");
      rep.witness = FrameWitness{m, m.frame.names[win->world]};
      return rep;
    }
    for (size_t pi = 0; pi < posets.size(); pi++) {
      rep.frames_examined += pframes[pi];
      rep.valuations_examined += pvals[pi];
    }
  }
  return rep;
}

SweepReport correspondence_sweep(const std::string& scheme,
                                 const std::string& condition, int max_worlds,
                                 int jobs, int cap) {
  require_cap(max_worlds, cap, "worlds");
  if (!find_scheme(scheme)) throw std::invalid_argument("unknown scheme: " + scheme);
  ConditionFn cond;
  try {
    cond = condition_fn(condition);
  } catch (const FrameError& e) {
    throw std::invalid_argument(e.what());
  }
  CompiledFormula cf = compile_formula(atom_form(scheme));

  SweepReport rep;
  rep.scheme = scheme;
  rep.condition = condition;
  rep.max_worlds = max_worlds;

  struct Disc {
    uint64_t seq = 0;  // frame ordinal within the poset
    bool holds = false;
    Frame frame;
  };

  for (int n = 1; n <= max_worlds; n++) {
    auto posets = poset_tables(n);
    const int J = jobs <= 1 ? 1 : jobs;
    struct Counts {
      uint64_t frames = 0, hv = 0, nn = 0, hnv = 0, vnh = 0;
    };
    std::vector<Counts> pc(posets.size());
    std::vector<std::optional<Disc>> pd(posets.size());

    run_workers(J, [&](int t) {
      Frame f;
      f.n = n;
      f.names = world_names(n);
      f.le.resize(n);
      f.sub.resize(n);
      std::vector<uint32_t> ups;
      std::vector<ConditionFn> none;
      for (size_t pi = size_t(t); pi < posets.size(); pi += size_t(J)) {
        Counts& c = pc[pi];
        frames_of_poset(f, posets[pi], none, [&](const Frame& g) {
          c.frames++;
          bool holds = cond(g).holds;
          upsets_into(g, ups);
          bool valid = scan_valuations(g, cf, ups).valid;
          if (holds && valid) c.hv++;
          else if (!holds && !valid) c.nn++;
          else {
            if (holds) c.hnv++;
            else c.vnh++;
            if (!pd[pi]) pd[pi] = Disc{c.frames, holds, g};
          }
          return true;
        });
      }
    });

    for (size_t pi = 0; pi < posets.size(); pi++) {
      rep.frames += pc[pi].frames;
      rep.holds_and_valid += pc[pi].hv;
      rep.neither += pc[pi].nn;
      rep.holds_not_valid += pc[pi].hnv;
      rep.valid_not_holds += pc[pi].vnh;
      if (pd[pi] && rep.discrepancy.empty()) {
        const Disc& d = *pd[pi];
        rep.discrepancy =
            std::string(d.holds ? "condition holds but atom form refuted on:\n"
                                : "atom form valid but condition fails on:\n") +
            frame_text(d.frame);
      }
    }
  }
  return rep;
}

// -------------------------------------------------------------- algebras --

namespace {

struct LatticeScaffold {
  int n = 0, top = 0;
  std::vector<uint32_t> up;  // up[a] = { b | a <= b }
  std::vector<int> meet, join, rpc;
  std::vector<int> mi;              // meet-irreducibles, ascending; top excluded
  std::vector<uint32_t> mi_above;   // mi_above[y] = mask of mi INDICES t with y <= mi[t]
};

// The unique maximal element of the mask under dn (dn[g] = elements <= g),
// or -1 when there is none.
int max_of(uint32_t set, const std::vector<uint32_t>& dn) {
  for (int g = 0; (1u << g) <= set; g++)
    if (((set >> g) & 1u) && !(set & ~dn[g])) return g;
  return -1;
}

// Heyting lattices on {0..n-1} with bot = 0, top = 1 (0 when n == 1),
// ascending by the order bitmask on the middle elements.
std::vector<LatticeScaffold> heyting_lattices(int n) {
  std::vector<LatticeScaffold> out;
  const int top = n == 1 ? 0 : 1;
  std::vector<std::pair<int, int>> bits;
  for (int i = 2; i < n; i++)
    for (int j = 2; j < n; j++)
      if (i != j) bits.push_back({i, j});

  std::vector<uint32_t> up(n), dn(n);
  const uint32_t full = (1u << n) - 1;
  for (uint64_t mask = 0; mask < (1ull << bits.size()); mask++) {
    up.assign(n, 0);
    up[0] = full;
    for (int i = 1; i < n; i++) up[i] = (1u << i) | (1u << top);
    for (size_t b = 0; b < bits.size(); b++)
      if ((mask >> b) & 1u) up[bits[b].first] |= 1u << bits[b].second;

    bool ok = true;
    for (int i = 0; ok && i < n; i++)
      for (int j = 0; ok && j < n; j++) {
        if (i == j || !((up[i] >> j) & 1u)) continue;
        if ((up[j] >> i) & 1u) ok = false;
        else if (up[j] & ~up[i]) ok = false;
      }
    if (!ok) continue;

    for (int m = 0; m < n; m++) {
      dn[m] = 0;
      for (int x = 0; x < n; x++)
        if ((up[x] >> m) & 1u) dn[m] |= 1u << x;
    }

    LatticeScaffold L;
    L.n = n;
    L.top = top;
    L.up = up;
    L.meet.assign(n * n, -1);
    L.join.assign(n * n, -1);
    L.rpc.assign(n * n, -1);
    for (int a = 0; ok && a < n; a++)
      for (int b = 0; ok && b < n; b++) {
        int g = max_of(dn[a] & dn[b], dn);
        if (g < 0) { ok = false; break; }
        L.meet[a * n + b] = g;
        // least upper bound: the maximal element of the common-lower-bound
        // trick does not apply upward, so mirror it through up
        uint32_t ub = up[a] & up[b];
        int j = -1;
        for (int c = 0; (1u << c) <= ub; c++)
          if (((ub >> c) & 1u) && !(ub & ~up[c])) { j = c; break; }
        if (j < 0) { ok = false; break; }
        L.join[a * n + b] = j;
      }
    if (!ok) continue;
    for (int a = 0; ok && a < n; a++)
      for (int b = 0; ok && b < n; b++) {
        uint32_t s = 0;
        for (int c = 0; c < n; c++)
          if ((up[L.meet[c * n + a]] >> b) & 1u) s |= 1u << c;
        int g = max_of(s, dn);
        if (g < 0) { ok = false; break; }  // not residuated: not a Heyting lattice
        L.rpc[a * n + b] = g;
      }
    if (!ok) continue;

    for (int m = 0; m < n; m++) {
      if (m == top) continue;
      uint32_t su = up[m] & ~(1u << m);
      int covers = 0;
      for (int c = 0; c < n; c++)
        if (((su >> c) & 1u) && (dn[c] & su) == (1u << c)) covers++;
      if (covers == 1) L.mi.push_back(m);
    }
    L.mi_above.assign(n, 0);
    for (int y = 0; y < n; y++)
      for (size_t t = 0; t < L.mi.size(); t++)
        if ((up[y] >> L.mi[t]) & 1u) L.mi_above[y] |= 1u << t;
    // every y < top must be the meet of the irreducibles above it
    for (int y = 0; y < n; y++) {
      if (y == top) continue;
      int acc = top;
      for (size_t t = 0; t < L.mi.size(); t++)
        if ((L.mi_above[y] >> t) & 1u) acc = L.meet[acc * n + L.mi[t]];
      if (acc != y) throw std::logic_error("meet-irreducible decomposition failed");
    }
    out.push_back(std::move(L));
  }
  return out;
}

struct AxiomPlan {
  bool cd = false;      // prune by CD during row placement
  bool circ4 = false;   // prune rows violating 4circa
  std::vector<Fml> post;  // remaining schemes, filtered on complete tables
};

AxiomPlan plan_axioms(const std::vector<std::string>& axioms) {
  AxiomPlan plan;
  std::vector<std::string> queue = axioms;
  std::set<std::string> seen;
  for (size_t i = 0; i < queue.size(); i++) {
    const std::string tok = queue[i];
    if (!seen.insert(tok).second) continue;
    if (tok == "CK" || tok == "CT" || tok == "CI") continue;  // always enforced
    if (tok == "CD" || tok == "Di") {
      plan.cd = true;
      continue;
    }
    if (tok == "Tr" || tok == "Ka") continue;  // equivalent to CT / CK
    if (tok == "4circa") {
      plan.circ4 = true;
      continue;
    }
    if (find_scheme(tok)) {
      plan.post.push_back(atom_form(tok));
      continue;
    }
    try {
      AxiomSet set = resolve_axiom_set(tok);
      for (const auto& s : set.schemes) queue.push_back(s);
      continue;
    } catch (const ProofError&) {
    }
    throw std::invalid_argument("unknown algebra axiom: " + tok);
  }
  return plan;
}

// All lewis rows for first argument a: a CK row is determined by a monotone
// assignment on the meet-irreducibles (CI forces top at and above a), the
// rest of the row being meets of those values.
std::vector<std::vector<int>> rows_for(const LatticeScaffold& L, int a, bool circ4) {
  const int n = L.n, top = L.top;
  const size_t k = L.mi.size();
  std::vector<int> f(k, 0);
  std::vector<std::vector<int>> rows;
  std::vector<int> row(n);

  auto le = [&](int x, int y) { return (L.up[x] >> y) & 1u; };

  std::function<void(size_t)> rec = [&](size_t t) {
    if (t == k) {
      for (int y = 0; y < n; y++) {
        if (y == top) {
          row[y] = top;
          continue;
        }
        int acc = top;
        for (size_t s = 0; s < k; s++)
          if ((L.mi_above[y] >> s) & 1u) acc = L.meet[acc * n + f[s]];
        row[y] = acc;
      }
      if (circ4) {
        for (int b = 0; b < n; b++)
          if (!le(row[b], row[row[b]])) return;
      }
      rows.push_back(row);
      return;
    }
    bool forced = le(a, L.mi[t]);
    for (int v = forced ? top : 0; v < (forced ? top + 1 : n); v++) {
      bool ok = true;
      for (size_t s = 0; ok && s < t; s++) {
        if (le(L.mi[s], L.mi[t]) && !le(f[s], v)) ok = false;
        if (le(L.mi[t], L.mi[s]) && !le(v, f[s])) ok = false;
      }
      if (!ok) continue;
      f[t] = v;
      rec(t + 1);
    }
  };
  rec(0);
  return rows;
}

struct AlgebraDfs {
  const LatticeScaffold& L;
  const AxiomPlan& plan;
  const std::function<bool(const Algebra&)>& visit;
  Algebra alg;
  std::vector<std::vector<std::vector<int>>> rows;
  uint64_t count = 0;
  bool aborted = false;

  AlgebraDfs(const LatticeScaffold& l, const AxiomPlan& p,
             const std::function<bool(const Algebra&)>& v)
      : L(l), plan(p), visit(v) {
    alg.n = L.n;
    alg.top = L.top;
    alg.bot = 0;
    alg.meet = L.meet;
    alg.join = L.join;
    alg.rpc = L.rpc;
    alg.lewis.assign(L.n * L.n, L.top);
    for (int a = 0; a < L.n; a++) rows.push_back(rows_for(L, a, plan.circ4));
  }

  bool ct_ok(int a) const {
    const int n = alg.n;
    for (int b = 0; b <= a; b++)
      for (int c = 0; c < n; c++) {
        if (!alg.le(alg.mt(alg.lw(a, b), alg.lw(b, c)), alg.lw(a, c))) return false;
        if (!alg.le(alg.mt(alg.lw(b, a), alg.lw(a, c)), alg.lw(b, c))) return false;
      }
    return true;
  }

  bool cd_ok(int a) const {
    const int n = alg.n;
    for (int x = 0; x <= a; x++)
      for (int y = 0; y <= a; y++) {
        int j = alg.jn(x, y);
        if (j > a || std::max({x, y, j}) != a) continue;
        for (int c = 0; c < n; c++)
          if (!alg.le(alg.mt(alg.lw(x, c), alg.lw(y, c)), alg.lw(j, c))) return false;
      }
    return true;
  }

  void go(int a) {
    if (aborted) return;
    if (a == alg.n) {
      for (const auto& phi : plan.post)
        if (!algebra_validates(alg, phi)) return;
      count++;
      if (!visit(alg)) aborted = true;
      return;
    }
    for (const auto& row : rows[a]) {
      std::copy(row.begin(), row.end(), alg.lewis.begin() + a * alg.n);
      if (!ct_ok(a)) continue;
      if (plan.cd && !cd_ok(a)) continue;
      go(a + 1);
      if (aborted) return;
    }
  }
};

}  // namespace

uint64_t enumerate_algebras(int n, const std::vector<std::string>& axioms,
                            const std::function<bool(const Algebra&)>& visit,
                            int cap) {
  require_cap(n, cap, "elements");
  AxiomPlan plan = plan_axioms(axioms);
  uint64_t count = 0;
  for (const auto& L : heyting_lattices(n)) {
    AlgebraDfs dfs(L, plan, visit);
    bool dead = false;
    for (const auto& r : dfs.rows)
      if (r.empty()) dead = true;
    if (dead) continue;
    dfs.go(0);
    count += dfs.count;
    if (dfs.aborted) break;
  }
  return count;
}

AlgebraSearchReport find_algebra_countermodel(const Fml& target,
                                              const std::vector<std::string>& axioms,
                                              int max_size, int cap) {
  require_cap(max_size, cap, "elements");
  AlgebraSearchReport rep;
  std::vector<std::string> vars = atoms(target);
  for (int s = 1; s <= max_size; s++) {
    bool found = false;
    enumerate_algebras(
        s, axioms,
        [&](const Algebra& a) {
          rep.algebras_examined++;
          if (algebra_validates(a, target)) return true;
          // recompute the first refuting valuation with the plain evaluator
          std::vector<int> pick(vars.size(), 0);
          std::map<std::string, int> val;
          for (;;) {
            for (size_t i = 0; i < vars.size(); i++) val[vars[i]] = pick[i];
            if (eval(a, val, target) != a.top) break;
            size_t i = vars.size();
            while (i > 0 && ++pick[i - 1] == a.n) pick[--i] = 0;
            if (i == 0)
              throw std::logic_error("algebra witness failed re-verification");
          }
          rep.witness = a;
          rep.refuting_valuation = val;
          found = true;
          return false;
        },
        cap);
    if (found) return rep;
    rep.exhausted_sizes.push_back(s);
  }
  return rep;
}

// -------------------------------------------------- fixpoint catalog sweep --

namespace {

uint32_t lw_mask(const Frame& f, uint32_t x, uint32_t y) {
  uint32_t r = 0;
  for (int w = 0; w < f.n; w++)
    if (!(f.sub[w] & x & ~y)) r |= 1u << w;
  return r;
}

uint32_t imp_mask(const Frame& f, uint32_t x, uint32_t y) {
  uint32_t r = 0;
  for (int w = 0; w < f.n; w++)
    if (!(f.le[w] & x & ~y)) r |= 1u << w;
  return r;
}

uint32_t box_mask(const Frame& f, uint32_t x) {
  uint32_t r = 0;
  for (int w = 0; w < f.n; w++)
    if (!(f.sub[w] & ~x)) r |= 1u << w;
  return r;
}

uint32_t iff_mask(const Frame& f, uint32_t x, uint32_t y) {
  return imp_mask(f, x, y) & imp_mask(f, y, x);
}

// Denotation of a catalog formula (atoms r and p only) under upset masks.
uint32_t eval_rp(const Frame& f, const Fml& phi, uint32_t R, uint32_t P) {
  switch (phi->op) {
    case Op::Bot: return 0;
    case Op::Top: return f.full();
    case Op::Atom:
      if (phi->atom == "r") return R;
      if (phi->atom == "p") return P;
      throw std::logic_error("catalog formula with foreign atom " + phi->atom);
    case Op::And: return eval_rp(f, phi->lhs, R, P) & eval_rp(f, phi->rhs, R, P);
    case Op::Or: return eval_rp(f, phi->lhs, R, P) | eval_rp(f, phi->rhs, R, P);
    case Op::Imp:
      return imp_mask(f, eval_rp(f, phi->lhs, R, P), eval_rp(f, phi->rhs, R, P));
    case Op::Lewis:
      return lw_mask(f, eval_rp(f, phi->lhs, R, P), eval_rp(f, phi->rhs, R, P));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CatalogSweepReport sweep_catalog_frames(const std::string& what,
                                        const std::vector<Frame>& frames) {
  if (what != "jv" && what != "js" && what != "x" && what != "uniqueness")
    throw std::invalid_argument("unknown catalog sweep: " + what);
  const bool uniq = what == "uniqueness";
  std::vector<Fml> side = fixpoint_catalog_side(2);
  std::vector<size_t> members;  // catalog indices taking part
  for (size_t i = 0; i < side.size(); i++)
    if (!uniq || guarded(side[i], "r")) members.push_back(i);

  CatalogSweepReport rep;
  rep.what = what;
  rep.frames = frames.size();
  rep.pairs = uniq ? members.size() : uint64_t(side.size()) * side.size();

  std::vector<uint32_t> ups;
  for (const Frame& f : frames) {
    upsets_into(f, ups);
    const size_t U = ups.size();
    const size_t iFull = U - 1;
    std::vector<int> idx(size_t(f.full()) + 1, -1);
    for (size_t i = 0; i < U; i++) idx[ups[i]] = int(i);
    auto at = [&](uint32_t mask) {
      int i = idx[mask];
      if (i < 0) throw std::logic_error("denotation is not an upset");
      return size_t(i);
    };

    // semantic tables over (r, p), deduplicated
    std::map<std::vector<uint32_t>, int> ids;
    std::vector<const std::vector<uint32_t>*> tab;
    std::vector<uint64_t> mult;
    std::vector<size_t> first;
    std::vector<int> id_of(side.size(), -1);
    for (size_t i : members) {
      std::vector<uint32_t> t(U * U);
      for (size_t iR = 0; iR < U; iR++)
        for (size_t iP = 0; iP < U; iP++)
          t[iR * U + iP] = eval_rp(f, side[i], ups[iR], ups[iP]);
      auto [it, fresh] = ids.try_emplace(std::move(t), int(ids.size()));
      if (fresh) {
        mult.push_back(0);
        first.push_back(i);
        tab.push_back(&it->first);
      }
      id_of[i] = it->second;
      mult[it->second]++;
    }
    const size_t K = tab.size();

    auto fail = [&](size_t i, size_t j, uint64_t weight) {
      rep.failures += weight;
      if (rep.first_failure.empty()) {
        std::ostringstream os;
        if (uniq) os << "chi = " << to_string(side[i]);
        else os << "psi = " << to_string(side[i]) << ", chi = " << to_string(side[j]);
        os << " on:\n" << frame_text(f);
        rep.first_failure = os.str();
      }
    };

    if (uniq) {
      for (size_t id = 0; id < K; id++) {
        const auto& t = *tab[id];
        bool bad = false;
        for (size_t iP = 0; iP < U && !bad; iP++)
          for (size_t iR = 0; iR < U && !bad; iR++) {
            uint32_t gR = box_mask(f, iff_mask(f, ups[iR], t[iR * U + iP]));
            for (size_t iQ = 0; iQ < U; iQ++) {
              rep.checks++;
              uint32_t gQ = box_mask(f, iff_mask(f, ups[iQ], t[iQ * U + iP]));
              uint32_t con = box_mask(f, iff_mask(f, ups[iR], ups[iQ]));
              if (imp_mask(f, gR & gQ, con) != f.full()) {
                bad = true;
                break;
              }
            }
          }
        if (bad) fail(first[id], first[id], mult[id]);
      }
      continue;
    }

    for (size_t i1 = 0; i1 < K; i1++)
      for (size_t i2 = 0; i2 < K; i2++) {
        const auto& tp = *tab[i1];  // psi
        const auto& tc = *tab[i2];  // chi
        bool bad = false;
        for (size_t iP = 0; iP < U; iP++) {
          rep.checks++;
          uint32_t A = tc[iFull * U + iP];  // chi[r := T]
          bool ok = true;
          if (what == "jv" || what == "x") {
            uint32_t B = tp[at(box_mask(f, A)) * U + iP];
            uint32_t th = lw_mask(f, B, A);
            if (what == "jv") {
              size_t it = at(th);
              ok = th == lw_mask(f, tp[it * U + iP], tc[it * U + iP]);
            } else {
              uint32_t th2 = lw_mask(f, tp[iFull * U + iP], A);
              ok = th == th2;
            }
          } else {  // js
            uint32_t th = lw_mask(f, tp[iFull * U + iP], A);
            size_t it = at(th);
            ok = th == lw_mask(f, tp[it * U + iP], tc[it * U + iP]);
          }
          if (!ok) {
            bad = true;
            break;
          }
        }
        if (bad) fail(first[i1], first[i2], mult[i1] * mult[i2]);
      }
  }
  return rep;
}

CatalogSweepReport sweep_catalog(const std::string& what,
                                 const std::vector<std::string>& conditions,
                                 int max_worlds, int cap) {
  return sweep_catalog_frames(what, frame_class(max_worlds, conditions, cap));
}

}  // namespace lewis
