#pragma once

// Degree-zero operators for the unramified principal series of SL_2.
//
// H(Lambda) = Q(q)[lambda, lambda^{-1}] maps to the Hecke algebra through
//   pind(lambda)  = q   T_{ts}^{-1},
//   opind(lambda) = q^{-1} T_{st},
// and back through
//   pres(T_s) = pres(T_t) = q - 1,  pres(T_{(st)^n}) = q^n (lambda^n + lambda^{-n}).
// Compact restriction on HH_0 is defined by 1_Gc = 1 - opind chi_M pres.

#include <map>
#include <string>
#include <string_view>

#include "compres/hecke.hpp"
#include "compres/hh0.hpp"

namespace compres {

class LambdaElement {
public:
  using Terms = std::map<int, LaurentQ>;

  LambdaElement() = default;
  static LambdaElement power(int n, const LaurentQ& c = LaurentQ(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coefficient(int n) const;

  void add_term(int n, const LaurentQ& c);

  LambdaElement& operator+=(const LambdaElement& other);
  LambdaElement& operator-=(const LambdaElement& other);
  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(const LaurentQ& c, const LambdaElement& x);
  friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

private:
  Terms terms_;
};

// Images in the Hecke algebra, before passing to HH_0.
HeckeElement pind_image(const LambdaElement& x);
HeckeElement opind_image(const LambdaElement& x);

HH0Class pind_map(const LambdaElement& x);
HH0Class opind_map(const LambdaElement& x);
LambdaElement pres_map(const HH0Class& c);

LambdaElement one_mc(const LambdaElement& x);
LambdaElement chi_m(const LambdaElement& x);
HH0Class one_gc(const HH0Class& c);

// 1_Gc pind(lambda^n) - pind 1_Mc (lambda^n)
HH0Class commutator_direct(int n);
// (pind - opind) chi_M (lambda^n), reduced to HH_0
HH0Class commutator_via_chi(int n);
// R_{1,(st)^n} / (q^n (q - 1)) * ((q - 1)[E(0)] - [Ts] - [Tt]) for n >= 1, else 0
HH0Class commutator_closed_form(int n);

// (q - 1)(q^{2n-1} - q^{2n-2} + ... - 1), the closed form of R_{1,(st)^n}.
LaurentQ r_identity_closed_form(int n);

std::string render(const LambdaElement& x);
LambdaElement parse_lambda(std::string_view text);

}  // namespace compres
