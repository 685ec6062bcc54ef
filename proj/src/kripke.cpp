#include "lewis/kripke.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>

namespace lewis {

int Frame::index(const std::string& name) const {
  for (int i = 0; i < n; i++)
    if (names[i] == name) return i;
  return -1;
}

Frame validate_frame(const std::vector<std::string>& worlds,
                     const std::vector<std::pair<std::string, std::string>>& leq,
                     const std::vector<std::pair<std::string, std::string>>& sub) {
  Frame f;
  f.n = (int)worlds.size();
  if (f.n == 0) throw FrameError("frame has no worlds");
  if (f.n > 31) throw FrameError("frame too large (at most 31 worlds)");
  f.names = worlds;
  for (int i = 0; i < f.n; i++)
    for (int j = i + 1; j < f.n; j++)
      if (worlds[i] == worlds[j]) throw FrameError("duplicate world '" + worlds[i] + "'");

  auto idx = [&](const std::string& w) {
    int i = f.index(w);
    if (i < 0) throw FrameError("unknown world '" + w + "'");
    return i;
  };

  f.le.assign(f.n, 0);
  for (int i = 0; i < f.n; i++) f.le[i] = 1u << i;
  for (const auto& [a, b] : leq) f.le[idx(a)] |= 1u << idx(b);
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < f.n; i++)
      for (int j = 0; j < f.n; j++)
        if ((f.le[i] >> j) & 1u) {
          uint32_t merged = f.le[i] | f.le[j];
          if (merged != f.le[i]) {
            f.le[i] = merged;
            changed = true;
          }
        }
  }
  for (int i = 0; i < f.n; i++)
    for (int j = 0; j < f.n; j++)
      if (i != j && ((f.le[i] >> j) & 1u) && ((f.le[j] >> i) & 1u))
        throw FrameError("leq not antisymmetric: " + f.names[i] + " <= " + f.names[j] +
                         " <= " + f.names[i]);

  f.sub.assign(f.n, 0);
  for (const auto& [a, b] : sub) f.sub[idx(a)] |= 1u << idx(b);

  // composition law: k <= l and l < m require k < m
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.le[k] >> l) & 1u)) continue;
      uint32_t missing = f.sub[l] & ~f.sub[k];
      if (missing) {
        int m = std::countr_zero(missing);
        throw FrameError("composition law fails: " + f.names[k] + " <= " + f.names[l] +
                         " < " + f.names[m] + " but not " + f.names[k] + " < " +
                         f.names[m]);
      }
    }
  return f;
}

// ---------- text format ----------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& tok, const std::string& sep,
                                               const std::string& what) {
  size_t at = tok.find(sep);
  if (at == std::string::npos || at == 0 || at + sep.size() >= tok.size())
    throw FrameError("malformed " + what + " entry '" + tok + "'");
  return {tok.substr(0, at), tok.substr(at + sep.size())};
}

}  // namespace

Model parse_model(const std::string& text) {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> leq, sub;
  std::vector<std::pair<std::string, std::vector<std::string>>> vals;
  bool saw_worlds = false;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    std::string head = toks[0];
    if (head == "worlds:") {
      saw_worlds = true;
      worlds.insert(worlds.end(), toks.begin() + 1, toks.end());
    } else if (head == "leq:") {
      for (size_t i = 1; i < toks.size(); i++) leq.push_back(split_pair(toks[i], "<=", "leq"));
    } else if (head == "sub:") {
      for (size_t i = 1; i < toks.size(); i++) sub.push_back(split_pair(toks[i], "<", "sub"));
    } else if (head == "val" && toks.size() >= 2 && toks[1].back() == ':') {
      std::string atom = toks[1].substr(0, toks[1].size() - 1);
      if (atom.empty()) throw FrameError("malformed val line");
      vals.emplace_back(atom, std::vector<std::string>(toks.begin() + 2, toks.end()));
    } else {
      throw FrameError("unrecognized line '" + line + "'");
    }
  }
  if (!saw_worlds) throw FrameError("missing 'worlds:' line");

  Model m;
  m.frame = validate_frame(worlds, leq, sub);
  for (const auto& [atom, ws] : vals) {
    uint32_t mask = 0;
    for (const std::string& w : ws) {
      int i = m.frame.index(w);
      if (i < 0) throw FrameError("val " + atom + ": unknown world '" + w + "'");
      mask |= 1u << i;
    }
    for (int w = 0; w < m.frame.n; w++)
      if ((mask >> w) & 1u) {
        uint32_t outside = m.frame.le[w] & ~mask;
        if (outside)
          throw FrameError("val " + atom + ": not an upset (" + m.frame.names[w] +
                           " is in, " + m.frame.names[std::countr_zero(outside)] +
                           " above it is not)");
      }
    m.val[atom] = mask;
  }
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string to_text(const Model& m) {
  const Frame& f = m.frame;
  std::ostringstream out;
  out << "worlds:";
  for (const auto& w : f.names) out << " " << w;
  out << "\n";
  std::ostringstream leq, sub;
  for (int i = 0; i < f.n; i++)
    for (int j = 0; j < f.n; j++) {
      if (i != j && ((f.le[i] >> j) & 1u)) leq << " " << f.names[i] << "<=" << f.names[j];
      if ((f.sub[i] >> j) & 1u) sub << " " << f.names[i] << "<" << f.names[j];
    }
  if (!leq.str().empty()) out << "leq:" << leq.str() << "\n";
  if (!sub.str().empty()) out << "sub:" << sub.str() << "\n";
  for (const auto& [atom, mask] : m.val) {
    out << "val " << atom << ":";
    for (int w = 0; w < f.n; w++)
      if ((mask >> w) & 1u) out << " " << f.names[w];
    out << "\n";
  }
  return out.str();
}

// ---------- evaluation ----------

bool forces(const Model& m, int w, const Fml& phi, std::vector<std::string>* warn) {
  const Frame& f = m.frame;
  switch (phi->op) {
    case Op::Bot:
      return false;
    case Op::Top:
      return true;
    case Op::Atom: {
      auto it = m.val.find(phi->atom);
      if (it == m.val.end()) {
        if (warn &&
            std::find(warn->begin(), warn->end(), phi->atom) == warn->end())
          warn->push_back(phi->atom);
        return false;
      }
      return (it->second >> w) & 1u;
    }
    case Op::And:
      return forces(m, w, phi->lhs, warn) && forces(m, w, phi->rhs, warn);
    case Op::Or:
      return forces(m, w, phi->lhs, warn) || forces(m, w, phi->rhs, warn);
    case Op::Imp:
      for (int v = 0; v < f.n; v++)
        if (((f.le[w] >> v) & 1u) && forces(m, v, phi->lhs, warn) &&
            !forces(m, v, phi->rhs, warn))
          return false;
      return true;
    case Op::Lewis:
      for (int v = 0; v < f.n; v++)
        if (((f.sub[w] >> v) & 1u) && forces(m, v, phi->lhs, warn) &&
            !forces(m, v, phi->rhs, warn))
          return false;
      return true;
  }
  return false;  // unreachable
}

uint32_t eval_mask(const Frame& f, const std::map<std::string, uint32_t>& val,
                   const Fml& phi) {
  switch (phi->op) {
    case Op::Bot:
      return 0;
    case Op::Top:
      return f.full();
    case Op::Atom: {
      auto it = val.find(phi->atom);
      return it == val.end() ? 0 : it->second;
    }
    case Op::And:
      return eval_mask(f, val, phi->lhs) & eval_mask(f, val, phi->rhs);
    case Op::Or:
      return eval_mask(f, val, phi->lhs) | eval_mask(f, val, phi->rhs);
    case Op::Imp: {
      uint32_t a = eval_mask(f, val, phi->lhs), b = eval_mask(f, val, phi->rhs);
      uint32_t out = 0;
      for (int w = 0; w < f.n; w++)
        if (!(f.le[w] & a & ~b)) out |= 1u << w;
      return out;
    }
    case Op::Lewis: {
      uint32_t a = eval_mask(f, val, phi->lhs), b = eval_mask(f, val, phi->rhs);
      uint32_t out = 0;
      for (int w = 0; w < f.n; w++)
        if (!(f.sub[w] & a & ~b)) out |= 1u << w;
      return out;
    }
  }
  return 0;  // unreachable
}

bool model_validates(const Model& m, const Fml& phi) {
  return eval_mask(m.frame, m.val, phi) == m.frame.full();
}

std::vector<uint32_t> upsets(const Frame& f) {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s <= f.full(); s++) {
    bool up = true;
    for (int w = 0; w < f.n && up; w++)
      if (((s >> w) & 1u) && (f.le[w] & ~s)) up = false;
    if (up) out.push_back(s);
  }
  return out;
}

int upset_index(const Frame& f, uint32_t mask) {
  std::vector<uint32_t> ups = upsets(f);
  auto it = std::lower_bound(ups.begin(), ups.end(), mask);
  return it != ups.end() && *it == mask ? (int)(it - ups.begin()) : -1;
}

CompiledFormula compile_formula(const Fml& phi) {
  CompiledFormula cf;
  cf.atom_names = atoms(phi);
  std::map<Fml, int, FmlLess> memo;
  std::function<int(const Fml&)> emit = [&](const Fml& f) -> int {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    CompiledFormula::Ins ins;
    ins.op = f->op;
    if (f->op == Op::Atom)
      ins.atom = (int)(std::lower_bound(cf.atom_names.begin(), cf.atom_names.end(),
                                        f->atom) -
                       cf.atom_names.begin());
    else if (f->lhs) {
      ins.a = emit(f->lhs);
      ins.b = emit(f->rhs);
    }
    cf.ins.push_back(ins);
    int id = (int)cf.ins.size() - 1;
    memo.emplace(f, id);
    return id;
  };
  emit(phi);
  return cf;
}

uint32_t eval_compiled(const Frame& f, const CompiledFormula& cf,
                       const uint32_t* atom_masks) {
  uint32_t full = f.full();
  // scratch buffer reused across calls
  static thread_local std::vector<uint32_t> out;
  out.resize(cf.ins.size());
  for (size_t i = 0; i < cf.ins.size(); i++) {
    const auto& ins = cf.ins[i];
    switch (ins.op) {
      case Op::Bot:
        out[i] = 0;
        break;
      case Op::Top:
        out[i] = full;
        break;
      case Op::Atom:
        out[i] = atom_masks[ins.atom];
        break;
      case Op::And:
        out[i] = out[ins.a] & out[ins.b];
        break;
      case Op::Or:
        out[i] = out[ins.a] | out[ins.b];
        break;
      case Op::Imp: {
        uint32_t a = out[ins.a], bad = a & ~out[ins.b], r = 0;
        for (int w = 0; w < f.n; w++)
          if (!(f.le[w] & bad)) r |= 1u << w;
        out[i] = r;
        break;
      }
      case Op::Lewis: {
        uint32_t bad = out[ins.a] & ~out[ins.b], r = 0;
        for (int w = 0; w < f.n; w++)
          if (!(f.sub[w] & bad)) r |= 1u << w;
        out[i] = r;
        break;
      }
    }
  }
  return out.back();
}

bool frame_validates(const Frame& f, const Fml& phi) {
  CompiledFormula cf = compile_formula(phi);
  std::vector<uint32_t> ups = upsets(f);
  size_t k = cf.atom_names.size();
  uint32_t full = f.full();
  if (k == 0) return eval_compiled(f, cf, nullptr) == full;
  std::vector<size_t> pick(k, 0);
  std::vector<uint32_t> masks(k, ups[0]);
  while (true) {
    if (eval_compiled(f, cf, masks.data()) != full) return false;
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
    if (i == 0) return true;
  }
}

// ---------- frame conditions ----------

namespace {

// down[m] = { x | x <= m }
std::vector<uint32_t> down_masks(const Frame& f) {
  std::vector<uint32_t> down(f.n, 0);
  for (int x = 0; x < f.n; x++)
    for (int m = 0; m < f.n; m++)
      if ((f.le[x] >> m) & 1u) down[m] |= 1u << x;
  return down;
}

using Checker = ConditionResult (*)(const Frame&);

ConditionResult check_lewis(const Frame& f) {
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.le[k] >> l) & 1u)) continue;
      uint32_t missing = f.sub[l] & ~f.sub[k];
      if (missing) return {false, {k, l, std::countr_zero(missing)}};
    }
  return {};
}

ConditionResult check_brilliant(const Frame& f) {
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      uint32_t missing = f.le[l] & ~f.sub[k];
      if (missing) return {false, {k, l, std::countr_zero(missing)}};
    }
  return {};
}

ConditionResult check_semi_transitive(const Frame& f) {
  std::vector<uint32_t> down = down_masks(f);
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      for (int m = 0; m < f.n; m++)
        if (((f.sub[l] >> m) & 1u) && !(f.sub[k] & down[m])) return {false, {k, l, m}};
    }
  return {};
}

ConditionResult check_gathering(const Frame& f) {
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      uint32_t missing = f.sub[l] & ~f.le[l];
      if (missing) return {false, {k, l, std::countr_zero(missing)}};
    }
  return {};
}

ConditionResult check_noetherian(const Frame& f) {
  // transitive closure of sub, then look for a reflexive point
  std::vector<uint32_t> reach = f.sub;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < f.n; i++)
      for (int j = 0; j < f.n; j++)
        if ((reach[i] >> j) & 1u) {
          uint32_t merged = reach[i] | reach[j];
          if (merged != reach[i]) {
            reach[i] = merged;
            changed = true;
          }
        }
  }
  for (int w = 0; w < f.n; w++)
    if ((reach[w] >> w) & 1u) return {false, {w}};
  return {};
}

ConditionResult check_supergathering(const Frame& f) {
  std::vector<uint32_t> down = down_masks(f);
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      for (int m = 0; m < f.n; m++) {
        if (!((f.sub[l] >> m) & 1u)) continue;
        // need x with k < x, l <= x, x != l, x <= m
        if (!(f.sub[k] & f.le[l] & ~(1u << l) & down[m])) return {false, {k, l, m}};
      }
    }
  return {};
}

ConditionResult check_strong(const Frame& f) {
  for (int k = 0; k < f.n; k++) {
    uint32_t missing = f.sub[k] & ~f.le[k];
    if (missing) return {false, {k, std::countr_zero(missing)}};
  }
  return {};
}

ConditionResult check_transitive_sub(const Frame& f) {
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      uint32_t missing = f.sub[l] & ~f.sub[k];
      if (missing) return {false, {k, l, std::countr_zero(missing)}};
    }
  return {};
}

ConditionResult check_gather_transitive(const Frame& f) {
  for (int k = 0; k < f.n; k++)
    for (int l = 0; l < f.n; l++) {
      if (!((f.sub[k] >> l) & 1u)) continue;
      uint32_t missing = f.sub[l] & ~f.sub[k] & ~f.le[l];
      if (missing) return {false, {k, l, std::countr_zero(missing)}};
    }
  return {};
}

ConditionResult check_discrete(const Frame& f) {
  for (int k = 0; k < f.n; k++) {
    uint32_t other = f.le[k] & ~(1u << k);
    if (other) return {false, {k, std::countr_zero(other)}};
  }
  return {};
}

const std::vector<std::pair<std::string, Checker>>& condition_table() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"lewis", check_lewis},
      {"brilliant", check_brilliant},
      {"semi_transitive", check_semi_transitive},
      {"gathering", check_gathering},
      {"noetherian", check_noetherian},
      {"supergathering", check_supergathering},
      {"strong", check_strong},
      {"transitive_sub", check_transitive_sub},
      {"gather_transitive", check_gather_transitive},
      {"discrete", check_discrete},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : condition_table()) out.push_back(name);
    return out;
  }();
  return names;
}

ConditionResult frame_condition(const Frame& f, const std::string& condition) {
  for (const auto& [name, fn] : condition_table())
    if (name == condition) return fn(f);
  throw FrameError("unknown frame condition '" + condition + "'");
}

ConditionFn condition_fn(const std::string& condition) {
  for (const auto& [name, fn] : condition_table())
    if (name == condition) return fn;
  throw FrameError("unknown frame condition '" + condition + "'");
}

const std::map<std::string, std::vector<std::string>>& scheme_frame_classes() {
  // Sound directions only: the scheme's atom form is valid on every finite
  // frame meeting all the listed conditions.  Tr/Ka/Di hold everywhere and
  // are omitted.  Wstar/Wcirc/Lcirca ride on supergathering because each is
  // derivable from W; La and Lbox need Noetherian gathering.
  static const std::map<std::string, std::vector<std::string>> table = {
      {"Box", {"brilliant"}},
      {"4box", {"semi_transitive"}},
      {"4sub", {"gathering"}},
      {"S", {"strong"}},
      {"P", {"transitive_sub"}},
      {"4circa", {"gather_transitive"}},
      {"44circa", {"gather_transitive"}},
      {"W", {"supergathering"}},
      {"Wstar", {"supergathering"}},
      {"Wcirc", {"supergathering"}},
      {"La", {"noetherian", "gathering"}},
      {"Lbox", {"noetherian", "gathering"}},
      {"Lcirca", {"supergathering"}},
  };
  return table;
}

Algebra dual_algebra(const Frame& f) {
  std::vector<uint32_t> ups = upsets(f);
  int n = (int)ups.size();
  auto idx = [&](uint32_t mask) {
    return (int)(std::lower_bound(ups.begin(), ups.end(), mask) - ups.begin());
  };
  Algebra a;
  a.n = n;
  a.bot = 0;
  a.top = n - 1;
  a.meet.resize(n * n);
  a.join.resize(n * n);
  a.rpc.resize(n * n);
  a.lewis.resize(n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      a.meet[i * n + j] = idx(ups[i] & ups[j]);
      a.join[i * n + j] = idx(ups[i] | ups[j]);
      uint32_t bad = ups[i] & ~ups[j], rpc = 0, lew = 0;
      for (int w = 0; w < f.n; w++) {
        if (!(f.le[w] & bad)) rpc |= 1u << w;
        if (!(f.sub[w] & bad)) lew |= 1u << w;
      }
      a.rpc[i * n + j] = idx(rpc);
      a.lewis[i * n + j] = idx(lew);
    }
  return a;
}

}  // namespace lewis
