#pragma once

// Hochschild chains of the group algebra of a lattice Z^r, the HKR map to
// differential forms on the dual torus, and the action of the indicator of
// the trivial subgroup (compact restriction for a lattice).
//
// A chain term lambda^{a_0} (x) ... (x) lambda^{a_p} is stored as the tuple
// (a_0, ..., a_p) of exponent vectors.  A form term lambda^a dlog(I) is
// stored as (a, I) with I a strictly increasing list of 0-based indices.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compres/laurent.hpp"

namespace compres::torus {

using Vec = std::vector<int>;
using Tuple = std::vector<Vec>;

class LatticeChain {
public:
  LatticeChain(int rank, int degree);
  static LatticeChain term(int rank, Tuple entries, const Rational& c = 1);
  // Degree-0 chain of a function on the torus.
  static LatticeChain from_function(const MultiLaurent& f);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<Tuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Tuple& entries, const Rational& c);

  LatticeChain& operator+=(const LatticeChain& other);
  LatticeChain& operator-=(const LatticeChain& other);
  friend LatticeChain operator+(LatticeChain a, const LatticeChain& b) { return a += b; }
  friend LatticeChain operator-(LatticeChain a, const LatticeChain& b) { return a -= b; }
  friend LatticeChain operator*(const Rational& c, const LatticeChain& x);
  friend bool operator==(const LatticeChain&, const LatticeChain&) = default;

private:
  int rank_;
  int degree_;
  std::map<Tuple, Rational> terms_;
};

class TorusForm {
public:
  using Key = std::pair<Vec, std::vector<int>>;

  TorusForm(int rank, int degree);
  static TorusForm term(int rank, Vec exponent, std::vector<int> indices, const Rational& c = 1);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Vec& exponent, const std::vector<int>& indices, const Rational& c);

  TorusForm& operator+=(const TorusForm& other);
  TorusForm& operator-=(const TorusForm& other);
  friend TorusForm operator+(TorusForm a, const TorusForm& b) { return a += b; }
  friend TorusForm operator-(TorusForm a, const TorusForm& b) { return a -= b; }
  friend TorusForm operator*(const Rational& c, const TorusForm& x);
  friend bool operator==(const TorusForm&, const TorusForm&) = default;

private:
  int rank_;
  int degree_;
  std::map<Key, Rational> terms_;
};

// Hochschild boundary sum (-1)^i d_i; d_i adds entries i and i+1, d_p adds
// the last entry onto the first.  Requires degree >= 1.
LatticeChain hochschild_b(const LatticeChain& c);
// (a_0, ..., a_p) -> (-1)^p (a_p, a_0, ..., a_{p-1})
LatticeChain cyclic_t(const LatticeChain& c);
// Drops degenerate terms: a zero exponent vector in any position >= 1.
LatticeChain normalize(const LatticeChain& c);
// Connes' operator on normalized chains: insert the zero vector in front of
// the signed cyclic sum of rotations.  The result is normalized.
LatticeChain connes_B(const LatticeChain& c);

// f_0 (x) ... (x) f_p -> (1/p!) f_0 df_1 ^ ... ^ df_p
TorusForm hkr(const LatticeChain& c);
// Keeps the translation-invariant part (exponent 0).
TorusForm pi0(const TorusForm& f);
TorusForm de_rham_d(const TorusForm& f);

// Multiplies each term by F(a_0 + ... + a_p).  With `indicator_of_zero` F is
// the indicator of the trivial subgroup; otherwise F = 1.
LatticeChain class_action(bool indicator_of_zero, const LatticeChain& c);

// All tuples of degree p with every exponent in [-window, window]^r.
std::vector<Tuple> windowed_tuples(int rank, int window, int degree);

struct SquareReport {
  int rank = 0;
  int window = 0;
  int degree = 0;
  int dim_cycles = 0;
  int dim_boundaries = 0;
  int dim_invariant = 0;
  bool square_commutes = false;    // hkr o class_action == pi0 o hkr on cycles
  bool hkr_kills_boundaries = false;
  bool pi0_kills_B = false;        // pi0 o hkr o B == 0 on cycles
  // c with hkr o B == c * d o hkr on normalized windowed chains; nullopt
  // when both sides vanish identically (degree == rank).
  std::optional<Rational> b_to_d_constant;
  bool b_to_d_consistent = false;
  bool pass = false;
};

// Exact windowed check of the square  HH_p --1_c--> HH_p,  HH_p --hkr--> Omega^p,
// with Pi_0 on forms.  Requires rank >= 1, window >= 1, 0 <= degree <= rank.
SquareReport homology_square_check(int rank, int window, int degree);

std::string render(const LatticeChain& c);
std::string render(const TorusForm& f);

}  // namespace compres::torus
