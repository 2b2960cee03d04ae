#pragma once

// Recursive-descent parser for the request grammar. Syntax errors throw
// ParseError with the 1-based line and column of the offending token;
// well-formed literals with invalid values (Z/1, a negative degree, a
// boundary of the wrong shape) throw SemanticError.

#include <cstddef>
#include <string_view>

#include "brauer/cli/request.hpp"

namespace brauer::cli {

/// `line` numbers the input when it comes from a batch file.
Request parse_request(std::string_view text, std::size_t line = 1);

// Single literals, each consuming the whole input.

/// `0`, `Z`, `Z^2 + Z/4 + Z/2`; terms in any order.
FgAbGroup parse_group(std::string_view text);
/// `0`, `(Z/2)^3 + (Z/4)^w`.
CyclicProfile parse_profile(std::string_view text);
/// `[[1,2],[3,4]]`; `[]` is the empty matrix.
IntMatrix parse_matrix(std::string_view text);
/// `complex { cells 0: 1; cells 2: 1; cells 3: 1; boundary 3: [[6]] }`.
ChainComplex parse_complex(std::string_view text);
/// Builders (`moore3(6)`, `wedge(sphere(2), lens(4,3))`, ...) or a complex.
SpaceDescription parse_space(std::string_view text);
/// `tower prefix [Z <-(x0)-] block [Z/2 <-(x1)- Z/4]`.
Tower parse_tower(std::string_view text);
/// `system prefix [] block [Z -(x5)-> Z]`.
DirectedSystem parse_system(std::string_view text);
/// `Z(3^inf) + (Z/3)^w`.
SymbolicTorsionGroup parse_torsion_group(std::string_view text);
/// `rule i>=1: J=(i, 2i]; rule 0<=i<=0: J=(1, inf)` or `none`.
ObstructionDescriptor parse_descriptor(std::string_view text);
/// `2i+1`, `i`, `-i+3`, `4`.
Affine parse_affine(std::string_view text);

}  // namespace brauer::cli
