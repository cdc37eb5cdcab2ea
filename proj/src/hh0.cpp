#include "compres/hh0.hpp"

#include <vector>

namespace compres {

HH0Class HH0Class::ts(const LaurentQ& c) {
  HH0Class x;
  x.coeff_s_ = c;
  return x;
}

HH0Class HH0Class::tt(const LaurentQ& c) {
  HH0Class x;
  x.coeff_t_ = c;
  return x;
}

HH0Class HH0Class::e_n(int n, const LaurentQ& c) {
  HH0Class x;
  x.add_e(n, c);
  return x;
}

LaurentQ HH0Class::coeff_e(int n) const {
  auto it = even_.find(n);
  return it == even_.end() ? LaurentQ{} : it->second;
}

void HH0Class::add_e(int n, const LaurentQ& c) {
  if (n < 0) throw std::invalid_argument("E(n) requires n >= 0");
  if (c.is_zero()) return;
  auto [it, inserted] = even_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) even_.erase(it);
  }
}

HH0Class& HH0Class::operator+=(const HH0Class& other) {
  coeff_s_ += other.coeff_s_;
  coeff_t_ += other.coeff_t_;
  for (const auto& [n, c] : other.even_) add_e(n, c);
  return *this;
}

HH0Class& HH0Class::operator-=(const HH0Class& other) {
  coeff_s_ -= other.coeff_s_;
  coeff_t_ -= other.coeff_t_;
  for (const auto& [n, c] : other.even_) add_e(n, -c);
  return *this;
}

HH0Class HH0Class::operator-() const { return HH0Class{} -= *this; }

HH0Class hh0_scale(const LaurentQ& c, const HH0Class& x) {
  HH0Class out;
  if (c.is_zero()) return out;
  out.add_s(c * x.coeff_s());
  out.add_t(c * x.coeff_t());
  for (const auto& [n, v] : x.even()) out.add_e(n, c * v);
  return out;
}

HH0Class reduce_to_hh0(const HeckeElement& a) {
  static const LaurentQ q_minus_1 = LaurentQ::q_power() - LaurentQ(1);
  static const LaurentQ q = LaurentQ::q_power();

  // Work from the longest word down; every rewrite either fixes a basis
  // word or produces strictly shorter words (or a same-length even word
  // that is already canonical).
  HeckeElement pending = a;
  HH0Class out;
  while (!pending.is_zero()) {
    auto last = std::prev(pending.terms().end());
    const WeylWord w = last->first;
    const LaurentQ c = last->second;
    pending.add_term(w, -c);

    const int len = w.length();
    if (len == 0) {
      out.add_e(0, c);
    } else if (len == 1) {
      (*w.first() == Letter::S ? out.add_s(c) : out.add_t(c));
    } else if (len % 2 == 0) {
      // T_{g w'} = T_g T_{w'} ~ T_{w'} T_g = T_{w' g}: the two even words of
      // a given length are cyclic rotations of each other.
      out.add_e(len / 2, c);
    } else {
      // w = g w' with w' ending in g: T_{w'} T_g = (q-1) T_{w'} + q T_{w'g}.
      const Letter g = *w.first();
      const WeylWord rest{other(g), len - 1};
      const WeylWord shorter = rest * WeylWord::generator(g);
      pending.add_term(rest, q_minus_1 * c);
      pending.add_term(shorter, q * c);
    }
  }
  return out;
}

std::string render(const HH0Class& x) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [n, c] : x.even()) terms.emplace_back(c, "[E(" + std::to_string(n) + ")]");
  terms.emplace_back(x.coeff_s(), "[Ts]");
  terms.emplace_back(x.coeff_t(), "[Tt]");
  return render_combination(terms);
}

}  // namespace compres
