#include "lewis/kernel.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lewis/ipc.hpp"
#include "lewis/parser.hpp"
#include "lewis/schemes.hpp"

namespace lewis {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

AxiomSet resolve_axiom_set(const std::string& text) {
  static const std::map<std::string, std::vector<std::string>> bases = {
      {"iA-", {"Tr", "Ka"}},
      {"iA", {"Tr", "Ka", "Di"}},
      {"iGLa-", {"Tr", "Ka", "La"}},
      {"iGLW-", {"Tr", "Ka", "W"}},
      {"iGLP-", {"Tr", "Ka", "Lbox", "P"}},
      {"iGLWcirc-", {"Tr", "Ka", "Wcirc"}},
      {"iGLacirc-", {"Tr", "Ka", "Lcirca"}},
  };
  AxiomSet out;
  std::vector<std::string> parts;
  for (const auto& piece : split(text, '+')) {
    std::string name = trim(piece);
    if (name.empty()) throw ProofError("empty component in axiom set '" + text + "'");
    parts.push_back(name);
    auto it = bases.find(name);
    if (it != bases.end()) {
      out.schemes.insert(it->second.begin(), it->second.end());
    } else if (find_scheme(name)) {
      out.schemes.insert(name);
    } else {
      throw ProofError("unknown axiom set component '" + name + "'");
    }
  }
  for (size_t i = 0; i < parts.size(); ++i)
    out.name += (i ? " + " : "") + parts[i];
  return out;
}

namespace {

int parse_ref(const std::string& tok, int lineno) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ProofError("line " + std::to_string(lineno) + ": bad line reference '" + tok + "'");
  }
}

Justification parse_just(const std::string& text, int lineno) {
  Justification j;
  std::istringstream in(text);
  std::string head;
  in >> head;
  auto fail = [&](const std::string& msg) {
    throw ProofError("line " + std::to_string(lineno) + ": " + msg);
  };
  if (head == "ax") {
    j.kind = Justification::Kind::Ax;
    in >> j.scheme;
    if (j.scheme.empty()) fail("ax needs a scheme name");
    std::string rest;
    std::getline(in, rest);
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest.front() != '{' || rest.back() != '}') fail("ax bindings must be {…}");
      std::string inner = rest.substr(1, rest.size() - 2);
      if (!trim(inner).empty())
        for (const auto& part : split(inner, ',')) {
          size_t at = part.find(":=");
          if (at == std::string::npos) fail("binding '" + trim(part) + "' lacks :=");
          std::string key = trim(part.substr(0, at));
          std::string val = trim(part.substr(at + 2));
          if (key.empty() || key[0] != '%') fail("binding key '" + key + "' must start with %");
          try {
            j.sigma[key] = parse(val);
          } catch (const std::exception& e) {
            fail("binding " + key + ": " + e.what());
          }
        }
    }
  } else if (head == "mp" || head == "na" || head == "ipc") {
    j.kind = head == "mp"   ? Justification::Kind::MP
             : head == "na" ? Justification::Kind::Na
                            : Justification::Kind::IPC;
    std::string rest;
    std::getline(in, rest);
    for (auto& chunk : split(rest, ',')) {
      std::istringstream toks(chunk);
      std::string t;
      while (toks >> t) j.refs.push_back(parse_ref(t, lineno));
    }
    if (j.kind == Justification::Kind::MP && j.refs.size() != 2)
      fail("mp needs exactly two line references");
    if (j.kind == Justification::Kind::Na && j.refs.size() != 1)
      fail("na needs exactly one line reference");
  } else {
    fail("unknown justification '" + head + "'");
  }
  return j;
}

}  // namespace

ProofScript parse_proof(const std::string& text) {
  ProofScript s;
  bool have_logic = false, have_goal = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0, last_index = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("logic:", 0) == 0) {
      if (have_logic) throw ProofError("line " + std::to_string(lineno) + ": duplicate logic header");
      s.axioms = resolve_axiom_set(trim(line.substr(6)));
      have_logic = true;
      continue;
    }
    if (line.rfind("goal:", 0) == 0) {
      if (have_goal) throw ProofError("line " + std::to_string(lineno) + ": duplicate goal header");
      try {
        s.goal = parse(trim(line.substr(5)));
      } catch (const std::exception& e) {
        throw ProofError("line " + std::to_string(lineno) + ": bad goal: " + e.what());
      }
      have_goal = true;
      continue;
    }

    size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw ProofError("line " + std::to_string(lineno) + ": expected '<n>. <formula> ; <justification>'");
    ProofLine pl;
    try {
      size_t used = 0;
      pl.index = std::stoi(line.substr(0, dot), &used);
      if (trim(line.substr(0, dot)).size() != used) throw std::invalid_argument("");
    } catch (...) {
      throw ProofError("line " + std::to_string(lineno) + ": bad line number '" +
                       line.substr(0, dot) + "'");
    }
    if (pl.index <= last_index)
      throw ProofError("line " + std::to_string(lineno) + ": line numbers must increase");
    last_index = pl.index;

    size_t semi = line.find(';', dot);
    if (semi == std::string::npos)
      throw ProofError("line " + std::to_string(lineno) + ": missing '; <justification>'");
    try {
      pl.formula = parse(trim(line.substr(dot + 1, semi - dot - 1)));
    } catch (const std::exception& e) {
      throw ProofError("line " + std::to_string(lineno) + ": " + e.what());
    }
    pl.just = parse_just(trim(line.substr(semi + 1)), lineno);
    s.lines.push_back(std::move(pl));
  }
  if (!have_logic) throw ProofError("missing 'logic:' header");
  if (!have_goal) throw ProofError("missing 'goal:' header");
  if (s.lines.empty()) throw ProofError("script has no proof lines");
  return s;
}

ProofScript load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str());
}

Verdict check_proof(const ProofScript& s) {
  std::map<int, Fml> derived;  // written index -> formula
  auto reject = [](int line, const std::string& why) { return Verdict{false, line, why}; };

  for (const auto& pl : s.lines) {
    auto cited = [&](int ref) -> Fml {
      auto it = derived.find(ref);
      return it == derived.end() ? nullptr : it->second;
    };
    switch (pl.just.kind) {
      case Justification::Kind::Ax: {
        if (!s.axioms.schemes.count(pl.just.scheme))
          return reject(pl.index,
                        "scheme " + pl.just.scheme + " is not in " + s.axioms.name);
        Fml inst;
        try {
          inst = scheme_instance(pl.just.scheme, pl.just.sigma);
        } catch (const std::exception& e) {
          return reject(pl.index, e.what());
        }
        if (!equal(inst, pl.formula))
          return reject(pl.index, "formula differs from the " + pl.just.scheme +
                                      " instance " + to_string(inst));
        break;
      }
      case Justification::Kind::MP: {
        Fml a = cited(pl.just.refs[0]), b = cited(pl.just.refs[1]);
        if (!a || !b) return reject(pl.index, "mp cites a line that is not yet derived");
        if (!equal(b, mk_imp(a, pl.formula)))
          return reject(pl.index, "line " + std::to_string(pl.just.refs[1]) +
                                      " is not (line " + std::to_string(pl.just.refs[0]) +
                                      " -> this line)");
        break;
      }
      case Justification::Kind::Na: {
        Fml a = cited(pl.just.refs[0]);
        if (!a) return reject(pl.index, "na cites a line that is not yet derived");
        if (a->op != Op::Imp)
          return reject(pl.index, "na premise is not an implication");
        if (!equal(pl.formula, mk_lewis(a->lhs, a->rhs)))
          return reject(pl.index, "formula is not the strict form of line " +
                                      std::to_string(pl.just.refs[0]));
        break;
      }
      case Justification::Kind::IPC: {
        Fml target = pl.formula;
        if (!pl.just.refs.empty()) {
          Fml conj;
          for (int ref : pl.just.refs) {
            Fml c = cited(ref);
            if (!c) return reject(pl.index, "ipc cites a line that is not yet derived");
            conj = conj ? mk_and(conj, c) : c;
          }
          target = mk_imp(conj, target);
        }
        bool ok;
        try {
          ok = ipc_valid(abstract_strict(target).body);
        } catch (const std::exception& e) {
          return reject(pl.index, e.what());
        }
        if (!ok)
          return reject(pl.index, "not an intuitionistic consequence of the cited lines");
        break;
      }
    }
    derived[pl.index] = pl.formula;
  }

  const ProofLine& last = s.lines.back();
  if (!equal(last.formula, s.goal))
    return reject(last.index, "final line differs from the goal " + to_string(s.goal));
  return Verdict{true, 0, "accepted"};
}

std::vector<CatalogEntry> verify_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".proof") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> out;
  for (const auto& p : files) {
    CatalogEntry entry;
    entry.file = p.filename().string();
    try {
      ProofScript s = load_proof_file(p.string());
      entry.logic = s.axioms.name;
      entry.goal = to_string(s.goal);
      entry.verdict = check_proof(s);
    } catch (const std::exception& e) {
      entry.verdict = Verdict{false, 0, e.what()};
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace lewis
