#include "lewis/ipc.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lewis {

namespace {

bool has_lewis(const Fml& f) {
  switch (f->op) {
    case Op::Lewis:
      return true;
    case Op::And:
    case Op::Or:
    case Op::Imp:
      return has_lewis(f->lhs) || has_lewis(f->rhs);
    default:
      return false;
  }
}

Fml abstract_walk(const Fml& f, std::map<Fml, Fml, FmlLess>& memo,
                  std::vector<std::pair<std::string, Fml>>& table) {
  switch (f->op) {
    case Op::Lewis: {
      auto it = memo.find(f);
      if (it != memo.end()) return it->second;
      std::string name = "_L" + std::to_string(table.size() + 1);
      Fml a = mk_atom(name);
      memo.emplace(f, a);
      table.emplace_back(name, f);
      return a;
    }
    case Op::And:
    case Op::Or:
    case Op::Imp: {
      // Two statements, not one call: argument evaluation order is
      // unspecified, and the table numbering must follow first occurrence.
      Fml l = abstract_walk(f->lhs, memo, table);
      Fml r = abstract_walk(f->rhs, memo, table);
      return f->op == Op::And ? mk_and(l, r) : f->op == Op::Or ? mk_or(l, r) : mk_imp(l, r);
    }
    default:
      return f;
  }
}

}  // namespace

AbstractedFormula abstract_strict(const Fml& phi) {
  AbstractedFormula out;
  std::map<Fml, Fml, FmlLess> memo;
  out.body = abstract_walk(phi, memo, out.table);
  return out;
}

std::vector<Fml> abstract_strict_shared(const std::vector<Fml>& phis,
                                        std::vector<std::pair<std::string, Fml>>* table) {
  std::map<Fml, Fml, FmlLess> memo;
  std::vector<std::pair<std::string, Fml>> tab;
  std::vector<Fml> out;
  out.reserve(phis.size());
  for (const auto& f : phis) out.push_back(abstract_walk(f, memo, tab));
  if (table) *table = std::move(tab);
  return out;
}

// ---------- G4ip proof search ----------
//
// Contraction-free sequent calculus: the left rules for T, F, &, and for
// implications whose antecedent is T, F, a conjunction, a disjunction, or an
// atom already in the context are all invertible, so they are applied
// eagerly ("saturation").  The remaining nondeterminism is |R and the
// implication-implication left rule
//
//   G, B->C |- A->B     G, C |- X
//   ------------------------------
//        G, (A->B)->C |- X
//
// which needs plain backtracking but no loop detection: every premise is
// smaller in the usual multiset weight ordering.

namespace {

struct Saturated {
  bool proved = false;                              // F appeared on the left
  std::set<std::string> atoms;                      // atomic hypotheses
  std::map<std::string, std::vector<Fml>> pending;  // a -> consequents of a->B, a unseen
  std::vector<std::pair<Fml, Fml>> impimps;         // (A->B, C) for (A->B)->C
  std::vector<Fml> disjs;
  std::set<Fml, FmlLess> seen_ii, seen_dj;          // dedup for the two lists above
};

void saturate(std::vector<Fml> work, Saturated& s) {
  while (!work.empty()) {
    Fml f = work.back();
    work.pop_back();
    switch (f->op) {
      case Op::Bot:
        s.proved = true;
        return;
      case Op::Top:
        break;
      case Op::Atom:
        if (s.atoms.insert(f->atom).second) {
          auto it = s.pending.find(f->atom);
          if (it != s.pending.end()) {
            for (auto& b : it->second) work.push_back(b);
            s.pending.erase(it);
          }
        }
        break;
      case Op::And:
        work.push_back(f->lhs);
        work.push_back(f->rhs);
        break;
      case Op::Or:
        if (s.seen_dj.insert(f).second) s.disjs.push_back(f);
        break;
      case Op::Imp: {
        const Fml& a = f->lhs;
        const Fml& b = f->rhs;
        switch (a->op) {
          case Op::Top:
            work.push_back(b);
            break;
          case Op::Bot:
            break;
          case Op::Atom:
            if (s.atoms.count(a->atom)) {
              work.push_back(b);
            } else {
              auto& slot = s.pending[a->atom];
              bool dup = false;
              for (auto& e : slot) dup = dup || equal(e, b);
              if (!dup) slot.push_back(b);
            }
            break;
          case Op::And:
            work.push_back(mk_imp(a->lhs, mk_imp(a->rhs, b)));
            break;
          case Op::Or:
            work.push_back(mk_imp(a->lhs, b));
            work.push_back(mk_imp(a->rhs, b));
            break;
          case Op::Imp:
            if (s.seen_ii.insert(f).second) s.impimps.emplace_back(a, b);
            break;
          case Op::Lewis:
            throw std::invalid_argument("ipc_valid: strict implication in input");
        }
        break;
      }
      case Op::Lewis:
        throw std::invalid_argument("ipc_valid: strict implication in input");
    }
  }
}

// Flatten a saturated context back into a plain hypothesis list, optionally
// leaving one implication-implication out (for the L4 branches).
std::vector<Fml> rebuild(const Saturated& s, int skip_impimp = -1) {
  std::vector<Fml> out;
  for (const auto& a : s.atoms) out.push_back(mk_atom(a));
  for (const auto& [a, bs] : s.pending)
    for (const auto& b : bs) out.push_back(mk_imp(mk_atom(a), b));
  for (size_t i = 0; i < s.impimps.size(); ++i)
    if ((int)i != skip_impimp) out.push_back(mk_imp(s.impimps[i].first, s.impimps[i].second));
  for (const auto& d : s.disjs) out.push_back(d);
  return out;
}

bool prove(std::vector<Fml> ctx, const Fml& goal) {
  if (goal->op == Op::Top) return true;

  Saturated s;
  saturate(std::move(ctx), s);
  if (s.proved) return true;

  if (goal->op == Op::Atom && s.atoms.count(goal->atom)) return true;

  if (goal->op == Op::And)
    return prove(rebuild(s), goal->lhs) && prove(rebuild(s), goal->rhs);
  if (goal->op == Op::Imp) {
    auto ctx2 = rebuild(s);
    ctx2.push_back(goal->lhs);
    return prove(std::move(ctx2), goal->rhs);
  }
  if (goal->op == Op::Lewis)
    throw std::invalid_argument("ipc_valid: strict implication in input");

  if (!s.disjs.empty()) {
    Fml d = s.disjs.back();
    s.disjs.pop_back();
    auto left = rebuild(s);
    auto right = left;
    left.push_back(d->lhs);
    right.push_back(d->rhs);
    return prove(std::move(left), goal) && prove(std::move(right), goal);
  }

  if (goal->op == Op::Or) {
    if (prove(rebuild(s), goal->lhs)) return true;
    if (prove(rebuild(s), goal->rhs)) return true;
  }

  for (size_t i = 0; i < s.impimps.size(); ++i) {
    const Fml& ab = s.impimps[i].first;  // A->B
    const Fml& c = s.impimps[i].second;
    auto base = rebuild(s, (int)i);
    auto prem1 = base;
    prem1.push_back(mk_imp(ab->rhs, c));
    if (!prove(std::move(prem1), ab)) continue;
    auto prem2 = std::move(base);
    prem2.push_back(c);
    if (prove(std::move(prem2), goal)) return true;
  }
  return false;
}

}  // namespace

bool ipc_valid(const Fml& phi) {
  if (has_lewis(phi)) throw std::invalid_argument("ipc_valid: strict implication in input");
  return prove({}, phi);
}

// ---------- bounded Kripke oracle ----------

bool ipc_forces(const IpcModel& m, int w, const Fml& phi) {
  switch (phi->op) {
    case Op::Bot:
      return false;
    case Op::Top:
      return true;
    case Op::Atom: {
      auto it = m.val.find(phi->atom);
      return it != m.val.end() && ((it->second >> w) & 1u);
    }
    case Op::And:
      return ipc_forces(m, w, phi->lhs) && ipc_forces(m, w, phi->rhs);
    case Op::Or:
      return ipc_forces(m, w, phi->lhs) || ipc_forces(m, w, phi->rhs);
    case Op::Imp:
      for (int v = 0; v < m.n; ++v)
        if (((m.le[w] >> v) & 1u) && ipc_forces(m, v, phi->lhs) && !ipc_forces(m, v, phi->rhs))
          return false;
      return true;
    case Op::Lewis:
      throw std::invalid_argument("ipc_forces: strict implication in input");
  }
  return false;
}

namespace {

uint32_t eval_mask(const Fml& f, const std::vector<uint32_t>& le, uint32_t full,
                   const std::map<std::string, uint32_t>& val) {
  switch (f->op) {
    case Op::Bot:
      return 0;
    case Op::Top:
      return full;
    case Op::Atom: {
      auto it = val.find(f->atom);
      return it == val.end() ? 0 : it->second;
    }
    case Op::And:
      return eval_mask(f->lhs, le, full, val) & eval_mask(f->rhs, le, full, val);
    case Op::Or:
      return eval_mask(f->lhs, le, full, val) | eval_mask(f->rhs, le, full, val);
    case Op::Imp: {
      uint32_t a = eval_mask(f->lhs, le, full, val);
      uint32_t b = eval_mask(f->rhs, le, full, val);
      uint32_t out = 0;
      int n = 0;
      while ((1u << n) <= full && n < 32) ++n;
      for (int w = 0; w < n; ++w)
        if ((le[w] & a & ~b) == 0) out |= 1u << w;
      return out;
    }
    case Op::Lewis:
      throw std::invalid_argument("ipc oracle: strict implication in input");
  }
  return 0;
}

}  // namespace

std::optional<IpcModel> ipc_countermodel(const Fml& phi, int max_worlds) {
  if (has_lewis(phi)) throw std::invalid_argument("ipc_countermodel: strict implication in input");
  std::vector<std::string> vars = atoms(phi);

  for (int n = 1; n <= max_worlds; ++n) {
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // Free order bits live on ordered pairs inside {1..n-1}; world 0 is the
    // root and sits below everything.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (i != j) pairs.emplace_back(i, j);

    for (uint64_t bits = 0; bits < (1ull << pairs.size()); ++bits) {
      std::vector<uint32_t> le(n, 0);
      for (int i = 0; i < n; ++i) le[i] = 1u << i;
      le[0] = full;
      for (size_t k = 0; k < pairs.size(); ++k)
        if ((bits >> k) & 1) le[pairs[k].first] |= 1u << pairs[k].second;

      bool ok = true;
      for (int i = 1; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
          if (((le[i] >> j) & 1u) && ((le[j] >> i) & 1u)) ok = false;  // antisymmetry
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (((le[i] >> j) & 1u) && (le[j] & ~le[i])) ok = false;  // transitivity
      if (!ok) continue;

      // All upsets of this poset, ascending as masks.
      std::vector<uint32_t> ups;
      for (uint32_t sset = 0; sset <= full; ++sset) {
        bool up = true;
        for (int w = 0; w < n && up; ++w)
          if (((sset >> w) & 1u) && (le[w] & ~sset)) up = false;
        if (up) ups.push_back(sset);
      }

      std::vector<size_t> pick(vars.size(), 0);
      while (true) {
        std::map<std::string, uint32_t> val;
        for (size_t i = 0; i < vars.size(); ++i) val[vars[i]] = ups[pick[i]];
        if (!((eval_mask(phi, le, full, val) >> 0) & 1u)) {
          IpcModel m;
          m.n = n;
          m.le = le;
          m.val = std::move(val);
          if (ipc_forces(m, 0, phi))
            throw std::logic_error("ipc_countermodel: mask/forcing evaluators disagree");
          return m;
        }
        size_t i = vars.size();
        while (i > 0 && ++pick[i - 1] == ups.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  return std::nullopt;
}

std::string to_text(const IpcModel& m) {
  std::ostringstream os;
  os << "worlds:";
  for (int i = 0; i < m.n; ++i) os << " w" << i;
  os << "\n";
  std::ostringstream leq;
  bool any = false;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j && ((m.le[i] >> j) & 1u)) {
        leq << " w" << i << "<=w" << j;
        any = true;
      }
  if (any) os << "leq:" << leq.str() << "\n";
  for (const auto& [name, mask] : m.val) {
    os << "val " << name << ":";
    for (int i = 0; i < m.n; ++i)
      if ((mask >> i) & 1u) os << " w" << i;
    os << "\n";
  }
  return os.str();
}

// ---------- test corpus ----------

std::vector<Fml> ipc_corpus(int max_connectives, int sample_per_size) {
  std::vector<Fml> leaves = {bot(), top(), mk_atom("p"), mk_atom("q")};
  std::vector<std::vector<Fml>> by_size;
  by_size.push_back(leaves);

  auto combine = [](const Fml& a, const Fml& b, int op) {
    return op == 0 ? mk_and(a, b) : op == 1 ? mk_or(a, b) : mk_imp(a, b);
  };

  for (int size = 1; size <= std::min(max_connectives, 2); ++size) {
    std::vector<Fml> cur;
    for (int op = 0; op < 3; ++op)
      for (int l = 0; l < size; ++l)
        for (const auto& a : by_size[l])
          for (const auto& b : by_size[size - 1 - l]) cur.push_back(combine(a, b, op));
    by_size.push_back(std::move(cur));
  }

  std::vector<Fml> out;
  for (const auto& bucket : by_size)
    out.insert(out.end(), bucket.begin(), bucket.end());

  // Exhausting sizes past 2 is hopeless (hundreds of millions of trees), so
  // the rest of the corpus is a fixed-seed sample at each size.  mt19937's
  // output sequence is pinned by the standard, so the corpus is identical
  // everywhere.
  std::mt19937 rng(0x1e51u);
  std::function<Fml(int)> build = [&](int c) -> Fml {
    if (c == 0) return leaves[rng() % leaves.size()];
    int op = (int)(rng() % 3);
    int l = (int)(rng() % (uint32_t)c);
    Fml a = build(l);
    Fml b = build(c - 1 - l);
    return combine(a, b, op);
  };
  for (int size = 3; size <= max_connectives; ++size)
    for (int i = 0; i < sample_per_size; ++i) out.push_back(build(size));
  return out;
}

}  // namespace lewis
