#pragma once

// Hand-derived Hochschild and cyclic homology dimensions (characteristic 0)
// for the built-in algebras:
//   ground field:      HH = 1, 0, 0, ...     HC = 1, 0, 1, 0, ...
//   dual numbers:      HH = 2, 1, 1, ...     (HC not tabulated)
//   Z/m:               HH = m, 0, 0, ...     HC = m, 0, m, 0, ...
//   upper triangular:  HH = 2, 0, 0, ...     HC = 2, 0, 2, 0, ...
// Q[Z/m] is a product of m copies of the field; the triangular algebra has
// the homology of its diagonal.

#include <optional>
#include <string>
#include <vector>

namespace compres::oracles {

struct ExpectedDims {
  std::vector<int> hh;
  std::optional<std::vector<int>> hc;
};

// Looks up by algebra name ("ground field", "dual numbers", "Z/m",
// "upper triangular 2x2"); nullopt for anything else.
std::optional<ExpectedDims> hand_derived_dims(const std::string& name, int cutoff);

}  // namespace compres::oracles
