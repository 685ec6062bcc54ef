// Extension translation: relativize a formula by a fresh atom p.  Commutes
// with the propositional connectives and maps a => b to (p -> a') => (p -> b').
#pragma once

#include "lewis/formula.hpp"

namespace lewis {

// Throws std::invalid_argument when p already occurs in phi (capture).
Fml stex(const Fml& phi, const std::string& p);

}  // namespace lewis
