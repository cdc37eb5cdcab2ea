#include "compres/oracles/rpoly_recursion.hpp"

namespace compres::oracles {

bool dihedral_leq(const WeylWord& x, const WeylWord& w) {
  return x == w || x.length() < w.length();
}

namespace {

template <class Cache, class Step>
LaurentQ recurse(Cache& cache, const WeylWord& x, const WeylWord& w, Step&& step) {
  if (x == w) return LaurentQ(1);
  if (!dihedral_leq(x, w)) return {};
  auto key = std::make_pair(x, w);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  LaurentQ value = step(x, w);
  cache.emplace(key, value);
  return value;
}

}  // namespace

LaurentQ RPolyRecursion::left(const WeylWord& x, const WeylWord& w) {
  return recurse(left_cache_, x, w, [this](const WeylWord& x, const WeylWord& w) {
    const WeylWord g = WeylWord::generator(*w.first());
    const WeylWord gw = g * w;
    const WeylWord gx = g * x;
    if (gx.length() < x.length()) return left(gx, gw);
    return LaurentQ::q_power() * left(gx, gw) + (LaurentQ::q_power() - LaurentQ(1)) * left(x, gw);
  });
}

LaurentQ RPolyRecursion::right(const WeylWord& x, const WeylWord& w) {
  return recurse(right_cache_, x, w, [this](const WeylWord& x, const WeylWord& w) {
    const WeylWord g = WeylWord::generator(*w.last());
    const WeylWord wg = w * g;
    const WeylWord xg = x * g;
    if (xg.length() < x.length()) return right(xg, wg);
    return LaurentQ::q_power() * right(xg, wg) + (LaurentQ::q_power() - LaurentQ(1)) * right(x, wg);
  });
}

}  // namespace compres::oracles
