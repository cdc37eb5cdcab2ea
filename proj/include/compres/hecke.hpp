#pragma once

// The Iwahori-Hecke algebra of the infinite dihedral group with generic
// parameter q:
//
//   T_w T_w' = T_{ww'}   if l(ww') = l(w) + l(w'),
//   T_g^2    = (q - 1) T_g + q   for g in {s, t}.

#include <map>
#include <string>
#include <vector>

#include "compres/laurent.hpp"
#include "compres/weyl.hpp"

namespace compres {

class HeckeElement {
public:
  using Terms = std::map<WeylWord, LaurentQ>;

  HeckeElement() = default;
  // c * T_e
  HeckeElement(const LaurentQ& c);

  static HeckeElement basis(const WeylWord& w, const LaurentQ& c = LaurentQ(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coefficient(const WeylWord& w) const;
  // Longest word in the support, 0 for the zero element.
  int max_length() const;

  void add_term(const WeylWord& w, const LaurentQ& c);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement operator-() const;
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentQ& c, const HeckeElement& a);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
  Terms terms_;
};

// Algebra product; the right factor is peeled one generator at a time.
HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b);

// a * T_g for a single generator.
HeckeElement mul_generator(const HeckeElement& a, Letter g);

// T_w^{-1}, built from T_g^{-1} = q^{-1} T_g - (1 - q^{-1}).  Results are
// memoized (thread-safe).
const HeckeElement& t_inverse(const WeylWord& w);

// R_{x,w} = (-1)^{l(x)+l(w)} q^{l(w)} [T_x] T_{w^{-1}}^{-1}.
LaurentQ r_polynomial(const WeylWord& x, const WeylWord& w);

// Sets q = 1 in every coefficient.
std::map<WeylWord, Rational> specialize_q1(const HeckeElement& a);

std::string render(const HeckeElement& a);

// Grammar: sums of [poly "*"] "T[" word "]" terms; see expr.hpp.
HeckeElement parse_hecke(std::string_view text);

}  // namespace compres
