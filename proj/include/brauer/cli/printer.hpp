#pragma once

// Canonical text for every literal kind; parse(print(x)) == x.

#include <string>

#include "brauer/cli/request.hpp"

namespace brauer::cli {

std::string print(const FgAbGroup& g);
std::string print(const CyclicProfile& p);
std::string print(const IntMatrix& m);
std::string print(const ChainComplex& c);
std::string print(const SpaceDescription& x);
/// `tower ...` or `system ...` according to the direction. Square scalar
/// maps print as `xk`.
std::string print(const PeriodicChain& c);
std::string print(const SymbolicTorsionGroup& g);
std::string print(const ObstructionDescriptor& d);
std::string print(const Affine& a);
std::string print(const Request& r);

/// Label used for telescope spaces: `telescope(G, xk)` for a constant
/// scalar system, `telescope(system ..., d)` otherwise; the degree is
/// omitted when it is 1 and the system is constant.
std::string telescope_label(const DirectedSystem& d, std::size_t degree);

}  // namespace brauer::cli
