#pragma once

// Independent check of reduce_to_hh0: exact elimination in the truncated
// space span{T_v : l(v) <= L + 2} modulo the commutators [T_x, T_y] with
// l(x) + l(y) <= L + 2.  Columns outside the canonical basis are pivoted
// away; what is left are canonical coordinates.
//
// Elimination is fraction-free over Q[q, q^-1], so a class is reported as a
// pair (scale, scaled): scale * [a] == scaled, with scale a nonzero Laurent
// polynomial (a monomial whenever every pivot used was a unit).

#include <vector>

#include "compres/hecke.hpp"
#include "compres/hh0.hpp"

namespace compres::oracles {

struct ScaledClass {
  LaurentQ scale;
  HH0Class scaled;
};

class HH0Oracle {
public:
  explicit HH0Oracle(int cutoff);

  int cutoff() const { return cutoff_; }
  int commutator_count() const { return commutators_; }

  // Requires a.max_length() <= cutoff + 2.  Throws std::runtime_error if a
  // non-canonical column survives elimination.
  ScaledClass classify(const HeckeElement& a) const;

  // True when scale * reduce_to_hh0(a) == scaled.
  static bool agrees(const ScaledClass& oracle, const HH0Class& candidate);

private:
  using Row = std::vector<LaurentQ>;
  struct Pivot {
    int column;
    Row row;
  };

  int column_of(const WeylWord& w) const;
  Row to_row(const HeckeElement& a) const;

  int cutoff_;
  int commutators_ = 0;
  std::vector<WeylWord> columns_;
  std::vector<Pivot> pivots_;
};

}  // namespace compres::oracles
