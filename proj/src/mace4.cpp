#include "lewis/algebra.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lewis {

// Reader/writer for the flat interpretation format used by finite-model
// search tools: interpretation( n, [attrs], [ function(...), ... ]).


namespace {

struct Mace4Lexer {
  std::string src;
  size_t pos = 0;

  std::string next() {
    while (pos < src.size() && (std::isspace((unsigned char)src[pos]))) pos++;
    if (pos >= src.size()) return "";
    char c = src[pos];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
        pos++;
      return src.substr(start, pos - start);
    }
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) pos++;
      return src.substr(start, pos - start);
    }
    pos++;
    return std::string(1, c);
  }

  std::string expect_any() {
    std::string t = next();
    if (t.empty()) throw AlgebraError("mace4: unexpected end of input");
    return t;
  }

  void expect(const std::string& want) {
    std::string t = expect_any();
    if (t != want) throw AlgebraError("mace4: expected '" + want + "', got '" + t + "'");
  }

  // Consumes tokens until the bracket/paren nesting opened before the call
  // closes (brackets and parens share one depth counter).
  void skip_balanced() {
    int depth = 1;
    while (depth > 0) {
      std::string t = expect_any();
      if (t == "[" || t == "(")
        depth++;
      else if (t == "]" || t == ")")
        depth--;
    }
  }
};

std::vector<int> parse_int_list(Mace4Lexer& lx, size_t expected) {
  lx.expect("[");
  std::vector<int> out;
  while (true) {
    std::string t = lx.expect_any();
    if (t == "]") break;
    if (t == ",") continue;
    bool neg = false;
    if (t == "-") {
      neg = true;
      t = lx.expect_any();
    }
    if (!std::isdigit((unsigned char)t[0]))
      throw AlgebraError("mace4: expected number in table, got '" + t + "'");
    int v = std::stoi(t);
    out.push_back(neg ? -v : v);
  }
  if (expected && out.size() != expected)
    throw AlgebraError("mace4: table has " + std::to_string(out.size()) +
                       " entries, expected " + std::to_string(expected));
  return out;
}

}  // namespace

Algebra load_mace4(const std::string& text) {
  Mace4Lexer lx{text};
  // Scan for the interpretation header.
  while (true) {
    std::string t = lx.next();
    if (t.empty()) throw AlgebraError("mace4: no interpretation block found");
    if (t == "interpretation") break;
  }
  lx.expect("(");
  std::string nt = lx.expect_any();
  if (!std::isdigit((unsigned char)nt[0])) throw AlgebraError("mace4: bad size");
  Algebra a;
  a.n = std::stoi(nt);
  if (a.n < 1 || a.n > 31) throw AlgebraError("mace4: unsupported size " + nt);
  lx.expect(",");
  lx.expect("[");
  lx.skip_balanced();  // attributes
  lx.expect(",");
  lx.expect("[");

  bool have_meet = false, have_rpc = false, have_lewis = false;
  while (true) {
    std::string t = lx.expect_any();
    if (t == ",") continue;
    if (t == "]") break;
    if (t != "function") {  // relation(...) and friends: skip
      lx.expect("(");
      lx.skip_balanced();
      continue;
    }
    lx.expect("(");
    std::string head = lx.expect_any();
    std::string after = lx.expect_any();
    if (after == "(") {
      // binary operator head: OP(_,_)
      lx.expect("_");
      lx.expect(",");
      lx.expect("_");
      lx.expect(")");
      lx.expect(",");
      std::vector<int> table = parse_int_list(lx, (size_t)a.n * a.n);
      for (int v : table)
        if (v < 0 || v >= a.n) throw AlgebraError("mace4: table value out of range");
      if (head == "^") {
        a.meet = table;
        have_meet = true;
      } else if (head == "*") {
        a.rpc = table;
        have_rpc = true;
      } else if (head == "+") {
        a.lewis = table;
        have_lewis = true;
      }  // other operators ignored
      lx.expect(")");
    } else if (after == ",") {
      std::vector<int> v = parse_int_list(lx, 1);
      a.consts[head] = v[0];
      lx.expect(")");
    } else {
      throw AlgebraError("mace4: malformed function entry near '" + head + "'");
    }
  }

  if (!have_meet) throw AlgebraError("mace4: missing meet table (^)");
  if (!have_rpc) throw AlgebraError("mace4: missing rpc table (*)");
  if (!have_lewis) throw AlgebraError("mace4: missing lewis table (+)");

  // top = 1 and bot = 0, verified against the meet table (x^1 = x, x^0 = 0);
  // degenerate one-element algebras use the single element for both.
  a.bot = 0;
  a.top = a.n == 1 ? 0 : 1;
  for (int x = 0; x < a.n; x++) {
    if (a.mt(x, a.top) != x)
      throw AlgebraError("mace4: element 1 is not the top (x^1 != x at x=" +
                         std::to_string(x) + ")");
    if (a.mt(x, a.bot) != a.bot)
      throw AlgebraError("mace4: element 0 is not the bottom (x^0 != 0 at x=" +
                         std::to_string(x) + ")");
  }

  // Join is absent from the files: reconstruct least upper bounds from the
  // meet order, failing loudly when a pair has none.
  a.join.assign((size_t)a.n * a.n, 0);
  for (int x = 0; x < a.n; x++)
    for (int y = 0; y < a.n; y++) {
      int lub = -1;
      for (int z = 0; z < a.n; z++) {
        if (!(a.le(x, z) && a.le(y, z))) continue;
        if (lub == -1 || a.le(z, lub)) lub = z;
      }
      // lub found greedily; confirm it is below every upper bound
      if (lub != -1)
        for (int z = 0; z < a.n; z++)
          if (a.le(x, z) && a.le(y, z) && !a.le(lub, z)) lub = -1;
      if (lub == -1)
        throw AlgebraError("mace4: no least upper bound for (" + std::to_string(x) +
                           "," + std::to_string(y) + ")");
      a.join[x * a.n + y] = lub;
    }

  HeytingReport rep = verify_heyting(a);
  if (!rep.ok)
    throw AlgebraError("mace4: not a Heyting algebra: " + rep.violations.front());
  return a;
}

Algebra load_mace4_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_mace4(buf.str());
}

std::string to_mace4(const Algebra& a) {
  std::ostringstream out;
  out << "interpretation( " << a.n << ", [number=1, seconds=0], [\n";
  for (const auto& [name, v] : a.consts)
    out << "\n        function(" << name << ", [ " << v << " ]),\n";
  auto table = [&](const char* op, const std::vector<int>& t) {
    out << "\n        function(" << op << "(_,_), [\n";
    for (int x = 0; x < a.n; x++) {
      out << "\t\t\t   ";
      for (int y = 0; y < a.n; y++) {
        out << t[x * a.n + y];
        if (x != a.n - 1 || y != a.n - 1) out << ",";
        if (y != a.n - 1) out << " ";
      }
      out << "\n";
    }
    out << "\t\t\t ])";
  };
  table("*", a.rpc);
  out << ",\n";
  table("+", a.lewis);
  out << ",\n";
  table("^", a.meet);
  out << "\n]).\n";
  return out.str();
}

}  // namespace lewis
