#include "compres/hecke.hpp"

#include <memory>
#include <mutex>

namespace compres {

HeckeElement::HeckeElement(const LaurentQ& c) { add_term(WeylWord{}, c); }

HeckeElement HeckeElement::basis(const WeylWord& w, const LaurentQ& c) {
  HeckeElement a;
  a.add_term(w, c);
  return a;
}

LaurentQ HeckeElement::coefficient(const WeylWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentQ{} : it->second;
}

int HeckeElement::max_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

void HeckeElement::add_term(const WeylWord& w, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, -c);
  return out;
}

HeckeElement operator*(const LaurentQ& c, const HeckeElement& a) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return t_mul(a, b); }

HeckeElement mul_generator(const HeckeElement& a, Letter g) {
  static const LaurentQ q_minus_1 = LaurentQ::q_power() - LaurentQ(1);
  static const LaurentQ q = LaurentQ::q_power();
  const WeylWord gen = WeylWord::generator(g);
  HeckeElement out;
  for (const auto& [w, c] : a.terms()) {
    WeylWord wg = w * gen;
    if (wg.length() > w.length()) {
      out.add_term(wg, c);
    } else {
      out.add_term(w, q_minus_1 * c);
      out.add_term(wg, q * c);
    }
  }
  return out;
}

HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [y, cy] : b.terms()) {
    HeckeElement partial = a;
    for (int i = 0; i < y.length(); ++i) partial = mul_generator(partial, y.letter(i));
    out += cy * partial;
  }
  return out;
}

const HeckeElement& t_inverse(const WeylWord& w) {
  // Entries are never erased, so references stay valid.
  static std::mutex mutex;
  static std::map<WeylWord, std::unique_ptr<HeckeElement>> cache;

  std::lock_guard lock(mutex);
  if (auto it = cache.find(w); it != cache.end()) return *it->second;

  // Walk the suffixes of w from shortest to longest, using
  // T_{g w'}^{-1} = T_{w'}^{-1} T_g^{-1}.  Every suffix is cached too.
  const LaurentQ q_inv = LaurentQ::q_power(-1);
  const LaurentQ one_minus_q_inv = LaurentQ(1) - LaurentQ::q_power(-1);
  HeckeElement current(LaurentQ(1));
  for (int k = 1; k <= w.length(); ++k) {
    // Suffix of w of length k.
    WeylWord suffix{w.letter(w.length() - k), k};
    if (auto it = cache.find(suffix); it != cache.end()) {
      current = *it->second;
      continue;
    }
    Letter g = suffix.letter(0);
    HeckeElement next = q_inv * mul_generator(current, g);
    next -= one_minus_q_inv * current;
    current = std::move(next);
    cache.emplace(suffix, std::make_unique<HeckeElement>(current));
  }
  if (w.is_identity()) cache.emplace(w, std::make_unique<HeckeElement>(current));
  return *cache.at(w);
}

LaurentQ r_polynomial(const WeylWord& x, const WeylWord& w) {
  LaurentQ coeff = t_inverse(w.inverse()).coefficient(x);
  if ((x.length() + w.length()) % 2 != 0) coeff = -coeff;
  return coeff.shifted(w.length());
}

std::map<WeylWord, Rational> specialize_q1(const HeckeElement& a) {
  std::map<WeylWord, Rational> out;
  for (const auto& [w, c] : a.terms()) {
    Rational v = c.evaluate(1);
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

std::string render(const HeckeElement& a) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [w, c] : a.terms()) terms.emplace_back(c, "T[" + w.str() + "]");
  return render_combination(terms);
}

}  // namespace compres
