#pragma once

// Verification suites behind `compres verify` and `compres table`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "compres/engine.hpp"
#include "compres/hecke.hpp"
#include "compres/report.hpp"

namespace compres::verify {

// Largest number of windowed basis chains in one torus degree.
inline constexpr double kMaxTorusChains = 100'000;

struct SuiteConfig {
  int nmax = 20;
  int lmax = 14;
  int oracle_cutoff = 8;
  std::vector<int> ranks{1, 2};
  int window = 2;
  std::optional<int> degree;  // all 0 <= p <= r when unset
  // Empty means the built-in set: ground field, dual numbers, Z/2..Z/4,
  // upper triangular 2x2.
  std::vector<engine::AlgebraSpec> specs;
  int engine_cutoff = 4;
  std::uint64_t seed = 20240917;
  int random_pairs = 500;
  int random_length = 8;

  // Throws ConfigError.
  void validate() const;
};

const std::vector<std::string>& suite_names();

// target is a suite name or "all".  Throws ConfigError for unknown targets
// and invalid configurations.
Report run_suite(const std::string& target, const SuiteConfig& config);

Report hecke_suite(const SuiteConfig& config);
Report rpoly_suite(const SuiteConfig& config);
Report hh0_suite(const SuiteConfig& config);
Report clozel_suite(const SuiteConfig& config);
Report commutator_suite(const SuiteConfig& config);
Report geomlemma_suite(const SuiteConfig& config);
Report torus_suite(const SuiteConfig& config);
Report engine_suite(const SuiteConfig& config);

// "a..b" with a <= b.  Throws ConfigError.
std::pair<int, int> parse_range(const std::string& text);

// target in {rpoly, commutator, pres}.
Table make_table(const std::string& target, int from, int to);

// Deterministic across platforms: raw 64-bit draws reduced modulo n.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

private:
  std::mt19937_64 gen_;
};

// 1 to 3 terms, word lengths <= max_length, small Laurent coefficients.
HeckeElement random_element(Rng& rng, int max_length);

}  // namespace compres::verify
