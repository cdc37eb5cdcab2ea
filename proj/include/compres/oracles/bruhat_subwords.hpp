#pragma once

// Bruhat order by brute force: the set of elements obtained by multiplying
// out every subsequence of the reduced word of w.

#include <set>

#include "compres/weyl.hpp"

namespace compres::oracles {

// 2^l(w) subsequences; intended for l(w) <= 16.
std::set<WeylWord> subword_products(const WeylWord& w);
bool bruhat_leq_bruteforce(const WeylWord& x, const WeylWord& w);

}  // namespace compres::oracles
