#pragma once
// Expression grammar shared by the CLI and the scenario files:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | identifier | '(' expr ')' | '-' factor
// Integers only; identifiers are variable names.
#include <string>

#include "k3cy/mpoly.hpp"
#include "k3cy/poly.hpp"

namespace k3cy {

// Multivariate parse; identifiers are interned into the table on sight.
MPoly parse_mpoly(const std::string& expr, VarTable& table);

// Univariate parse; any identifier other than var is a parse error.
UniPoly parse_upoly(const std::string& expr, const std::string& var);

std::string upoly_to_string(const UniPoly& p, const std::string& var);

}  // namespace k3cy
