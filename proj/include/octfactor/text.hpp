#pragma once

// Textual syntax for octonions and polynomials; printing and parsing use the
// same grammar so that printed values parse back unchanged.
//
//   octonion := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational ['*'] [basis] | basis
//   basis    := 1 | i | j | ij | l | il | jl | ijl        (ijl is (ij)l)
//
//   poly     := ['+'|'-'] pterm (('+'|'-') pterm)*
//   pterm    := [rational ['*']] [basis | '(' octonion ')'] ['*'] [x ['^' k]]
//
// Whitespace is ignored between tokens; terms of equal degree are summed.

#include <string>
#include <string_view>

#include "octfactor/algebra.hpp"
#include "octfactor/oct_poly.hpp"

namespace octfactor {

/// Throws ParseError with the offending position.
Octonion parse_octonion(std::string_view src, const AlgebraRef& algebra);
OctPoly parse_poly(std::string_view src, const AlgebraRef& algebra);

/// "1/2 + 1/2*ij - il", lowest basis index first, "0" for zero.
std::string format_octonion(const Octonion& z);
/// "l*x^3 + il*x^2 + (1/2*i - 1/2*l)*x + 1/2*j", highest degree first.
std::string format_poly(const OctPoly& f);

}  // namespace octfactor
