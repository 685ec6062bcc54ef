// Finite Heyting algebra expansions: a Heyting algebra (meet, join, relative
// pseudocomplement) over elements 0..n-1 together with a binary lewis table.
// The defining equations:
//   CK:  (a=>b) ^ (a=>c) = a=>(b^c)
//   CT:  (a=>b) ^ (b=>c) <= a=>c
//   CI:  a=>a = top
//   CD:  (a=>c) ^ (b=>c) <= (a v b)=>c      (normalized algebras only)
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lewis/formula.hpp"

namespace lewis {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Algebra {
  int n = 0;
  int top = 0, bot = 0;
  std::vector<int> meet, join, rpc, lewis;  // n x n, row-major
  std::map<std::string, int> consts;        // named elements (c1.. from Mace4)

  int mt(int a, int b) const { return meet[a * n + b]; }
  int jn(int a, int b) const { return join[a * n + b]; }
  int rp(int a, int b) const { return rpc[a * n + b]; }
  int lw(int a, int b) const { return lewis[a * n + b]; }
  bool le(int a, int b) const { return mt(a, b) == a; }
};

struct HeytingReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Lattice laws, bounds, join-consistency and residuation, exhaustively.
HeytingReport verify_heyting(const Algebra& a);

// First violation is described in *why when given.
bool check_ck(const Algebra& a, std::string* why = nullptr);
bool check_ct(const Algebra& a, std::string* why = nullptr);
bool check_ci(const Algebra& a, std::string* why = nullptr);
bool check_cd(const Algebra& a, std::string* why = nullptr);

// Homomorphic evaluation; throws AlgebraError on a missing atom binding.
int eval(const Algebra& a, const std::map<std::string, int>& valuation, const Fml& phi);

// eval == top under every assignment of atoms(phi) to elements.
bool algebra_validates(const Algebra& a, const Fml& phi);

// Mace4 interpretation blocks: interpretation(n, [attrs], [ function(...) ]).
// Reads ^ as meet, * as rpc, + as lewis (row-major tables) and arity-0
// function(cK, [v]) entries as named constants; everything else in the file
// is ignored.  top/bot are identified from the meet table (x^top = x,
// x^bot = bot), join is reconstructed as least upper bounds from the meet
// order, and verify_heyting must pass; AlgebraError otherwise.
Algebra load_mace4(const std::string& text);
Algebra load_mace4_file(const std::string& path);

// Render in the same Mace4 subset (meet/rpc/lewis tables).
std::string to_mace4(const Algebra& a);

}  // namespace lewis
