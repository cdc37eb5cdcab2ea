#include "compres/spectral.hpp"

#include <vector>

namespace compres {

LambdaElement LambdaElement::power(int n, const LaurentQ& c) {
  LambdaElement x;
  x.add_term(n, c);
  return x;
}

LaurentQ LambdaElement::coefficient(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? LaurentQ{} : it->second;
}

void LambdaElement::add_term(int n, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& other) {
  for (const auto& [n, c] : other.terms_) add_term(n, c);
  return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& other) {
  for (const auto& [n, c] : other.terms_) add_term(n, -c);
  return *this;
}

LambdaElement operator*(const LaurentQ& c, const LambdaElement& x) {
  LambdaElement out;
  if (c.is_zero()) return out;
  for (const auto& [n, v] : x.terms_) out.add_term(n, c * v);
  return out;
}

HeckeElement pind_image(const LambdaElement& x) {
  HeckeElement out;
  for (const auto& [n, c] : x.terms()) {
    if (n >= 0)
      out += c.shifted(n) * t_inverse(WeylWord::ts_power(n));
    else
      out += HeckeElement::basis(WeylWord::ts_power(-n), c.shifted(n));
  }
  return out;
}

HeckeElement opind_image(const LambdaElement& x) {
  HeckeElement out;
  for (const auto& [n, c] : x.terms()) {
    if (n >= 0)
      out += HeckeElement::basis(WeylWord::st_power(n), c.shifted(-n));
    else
      out += c.shifted(-n) * t_inverse(WeylWord::st_power(-n));
  }
  return out;
}

HH0Class pind_map(const LambdaElement& x) { return reduce_to_hh0(pind_image(x)); }
HH0Class opind_map(const LambdaElement& x) { return reduce_to_hh0(opind_image(x)); }

LambdaElement pres_map(const HH0Class& c) {
  const LaurentQ q_minus_1 = LaurentQ::q_power() - LaurentQ(1);
  LambdaElement out;
  out.add_term(0, q_minus_1 * (c.coeff_s() + c.coeff_t()));
  for (const auto& [n, v] : c.even()) {
    LaurentQ scaled = v.shifted(n);
    out.add_term(n, scaled);
    out.add_term(-n, scaled);
  }
  return out;
}

LambdaElement one_mc(const LambdaElement& x) {
  return LambdaElement::power(0, x.coefficient(0));
}

LambdaElement chi_m(const LambdaElement& x) {
  LambdaElement out;
  for (const auto& [n, c] : x.terms())
    if (n >= 1) out.add_term(n, c);
  return out;
}

HH0Class one_gc(const HH0Class& c) { return c - opind_map(chi_m(pres_map(c))); }

HH0Class commutator_direct(int n) {
  const LambdaElement x = LambdaElement::power(n);
  return one_gc(pind_map(x)) - pind_map(one_mc(x));
}

HH0Class commutator_via_chi(int n) {
  const LambdaElement y = chi_m(LambdaElement::power(n));
  return reduce_to_hh0(pind_image(y) - opind_image(y));
}

HH0Class commutator_closed_form(int n) {
  if (n < 1) return {};
  const LaurentQ q_minus_1 = LaurentQ::q_power() - LaurentQ(1);
  const LaurentQ r = r_polynomial(WeylWord::identity(), WeylWord::st_power(n));
  const LaurentQ factor = divide_exact(r, q_minus_1.shifted(n));
  HH0Class shape = HH0Class::e_n(0, q_minus_1) - HH0Class::ts() - HH0Class::tt();
  return hh0_scale(factor, shape);
}

LaurentQ r_identity_closed_form(int n) {
  LaurentQ alternating;
  for (int k = 0; k < 2 * n; ++k) alternating.add_term(k, k % 2 == 1 ? 1 : -1);
  return (LaurentQ::q_power() - LaurentQ(1)) * alternating;
}

std::string render(const LambdaElement& x) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [n, c] : x.terms()) terms.emplace_back(c, "L^" + std::to_string(n));
  return render_combination(terms);
}

}  // namespace compres
