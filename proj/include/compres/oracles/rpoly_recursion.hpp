#pragma once

// R-polynomials from the descent recursion, using only lengths and the
// dihedral Bruhat order (x <= w iff x == w or l(x) < l(w)).
//
// With s a descent of w:
//   R_{x,w} = R_{sx,sw}                      if sx < x,
//   R_{x,w} = (q - 1) R_{x,sw} + q R_{sx,sw}  otherwise
// (left version); the right version multiplies by s on the right.

#include <map>
#include <utility>

#include "compres/laurent.hpp"
#include "compres/weyl.hpp"

namespace compres::oracles {

class RPolyRecursion {
public:
  LaurentQ left(const WeylWord& x, const WeylWord& w);
  LaurentQ right(const WeylWord& x, const WeylWord& w);

private:
  using Key = std::pair<WeylWord, WeylWord>;
  std::map<Key, LaurentQ> left_cache_;
  std::map<Key, LaurentQ> right_cache_;
};

// Dihedral Bruhat order from lengths alone.
bool dihedral_leq(const WeylWord& x, const WeylWord& w);

}  // namespace compres::oracles
