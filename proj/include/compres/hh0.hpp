#pragma once

// The trace quotient HH_0 = A / [A, A] of the Hecke algebra, in the basis
// [T_s], [T_t], [T_{(st)^n}] (n >= 0).  The class of T_{(st)^n} is written
// E(n); E(0) is the class of the unit.

#include <map>
#include <string>
#include <string_view>

#include "compres/hecke.hpp"

namespace compres {

class HH0Class {
public:
  HH0Class() = default;

  static HH0Class ts(const LaurentQ& c = LaurentQ(1));
  static HH0Class tt(const LaurentQ& c = LaurentQ(1));
  static HH0Class e_n(int n, const LaurentQ& c = LaurentQ(1));

  const LaurentQ& coeff_s() const { return coeff_s_; }
  const LaurentQ& coeff_t() const { return coeff_t_; }
  const std::map<int, LaurentQ>& even() const { return even_; }
  LaurentQ coeff_e(int n) const;
  bool is_zero() const { return coeff_s_.is_zero() && coeff_t_.is_zero() && even_.empty(); }

  void add_s(const LaurentQ& c) { coeff_s_ += c; }
  void add_t(const LaurentQ& c) { coeff_t_ += c; }
  void add_e(int n, const LaurentQ& c);

  HH0Class& operator+=(const HH0Class& other);
  HH0Class& operator-=(const HH0Class& other);
  friend HH0Class operator+(HH0Class a, const HH0Class& b) { return a += b; }
  friend HH0Class operator-(HH0Class a, const HH0Class& b) { return a -= b; }
  HH0Class operator-() const;
  friend bool operator==(const HH0Class&, const HH0Class&) = default;

private:
  LaurentQ coeff_s_;
  LaurentQ coeff_t_;
  std::map<int, LaurentQ> even_;
};

HH0Class hh0_scale(const LaurentQ& c, const HH0Class& x);

// Class of `a` modulo commutators.  Even words are rotated to their
// s-initial form; an odd word g w' (w' ending in g) is rotated to T_{w'} T_g,
// where the quadratic relation shortens it by two.
HH0Class reduce_to_hh0(const HeckeElement& a);

// E(n) terms first (ascending n), then [Ts], [Tt].
std::string render(const HH0Class& x);
HH0Class parse_hh0(std::string_view text);

}  // namespace compres
