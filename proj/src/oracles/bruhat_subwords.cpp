#include "compres/oracles/bruhat_subwords.hpp"

#include <stdexcept>

namespace compres::oracles {

std::set<WeylWord> subword_products(const WeylWord& w) {
  const int n = w.length();
  if (n > 16) throw std::length_error("subword enumeration limited to length 16");
  std::set<WeylWord> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    WeylWord x;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) x = x * WeylWord::generator(w.letter(i));
    out.insert(x);
  }
  return out;
}

bool bruhat_leq_bruteforce(const WeylWord& x, const WeylWord& w) {
  return subword_products(w).count(x) > 0;
}

}  // namespace compres::oracles
