#include "compres/oracles/engine_dims.hpp"

namespace compres::oracles {

namespace {

ExpectedDims semisimple(int count, int cutoff) {
  ExpectedDims d;
  for (int n = 0; n <= cutoff; ++n) d.hh.push_back(n == 0 ? count : 0);
  std::vector<int> hc;
  for (int n = 0; n <= cutoff; ++n) hc.push_back(n % 2 == 0 ? count : 0);
  d.hc = hc;
  return d;
}

}  // namespace

std::optional<ExpectedDims> hand_derived_dims(const std::string& name, int cutoff) {
  if (name == "ground field") return semisimple(1, cutoff);
  if (name == "upper triangular 2x2") return semisimple(2, cutoff);
  if (name == "dual numbers") {
    ExpectedDims d;
    for (int n = 0; n <= cutoff; ++n) d.hh.push_back(n == 0 ? 2 : 1);
    return d;
  }
  if (name.rfind("Z/", 0) == 0) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(name.substr(2), &used);
      if (used == name.size() - 2 && m >= 1) return semisimple(m, cutoff);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace compres::oracles
