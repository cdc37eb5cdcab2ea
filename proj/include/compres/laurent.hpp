#pragma once

// Exact scalars and sparse Laurent polynomials.
//
// Every coefficient in the library is an exact rational (GMP mpq).  LaurentQ
// is a univariate Laurent polynomial in the Hecke parameter q; MultiLaurent
// is its several-variable cousin used for functions on a complex torus.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compres {

using Rational = mpq_class;

// n/d in lowest terms; throws DivisionByZero for d == 0.
Rational ratio(long n, long d);

std::string render_rational(const Rational& x);
// Accepts "n" or "n/d" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class NotDivisible : public std::domain_error {
public:
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

class LaurentQ {
public:
  using Terms = std::map<int, Rational>;

  LaurentQ() = default;
  LaurentQ(long c) : LaurentQ(Rational(c)) {}
  LaurentQ(const Rational& c);

  static LaurentQ monomial(const Rational& c, int exponent);
  static LaurentQ q_power(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Units of the Laurent ring are exactly the nonzero monomials.
  bool is_unit() const { return terms_.size() == 1; }

  // Both require a nonzero polynomial.
  int min_degree() const;
  int max_degree() const;

  Rational coefficient(int exponent) const;
  Rational evaluate(const Rational& x) const;

  // Multiplication by q^k.
  LaurentQ shifted(int k) const;

  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator-=(const LaurentQ& other);
  LaurentQ& operator*=(const LaurentQ& other);
  LaurentQ& operator*=(const Rational& c);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator*(LaurentQ a, const Rational& c) { return a *= c; }
  friend LaurentQ operator*(const Rational& c, LaurentQ a) { return a *= c; }
  LaurentQ operator-() const;

  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.terms_ == b.terms_;
  }

  // Adds c*q^e in place.
  void add_term(int exponent, const Rational& c);

private:
  Terms terms_;
};

// Returns c with b*c == a.  Throws DivisionByZero when b == 0 and
// NotDivisible when no Laurent quotient exists.
LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b);

// Canonical form: terms by ascending exponent, e.g. "-1 + q^2", "q^-1 - 1/2*q".
std::string render(const LaurentQ& p);
std::ostream& operator<<(std::ostream& os, const LaurentQ& p);

// Parses the textual grammar (see expr.hpp for the full expression parser).
LaurentQ parse_laurent(std::string_view text);

// Renders sum_i coeff_i * token_i with the conventions shared by every
// module: multi-term coefficients are parenthesized, unit coefficients are
// dropped, signs are pulled to the front.  Zero terms are skipped.
std::string render_combination(
    const std::vector<std::pair<LaurentQ, std::string>>& terms);

// Laurent polynomial in r variables with rational coefficients.
class MultiLaurent {
public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  explicit MultiLaurent(int rank);
  static MultiLaurent monomial(int rank, const Rational& c, Exponent exponent);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& exponent) const;

  void add_term(const Exponent& exponent, const Rational& c);

  MultiLaurent& operator+=(const MultiLaurent& other);
  MultiLaurent& operator-=(const MultiLaurent& other);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) {
    return a += b;
  }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) {
    return a -= b;
  }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

private:
  void check_exponent(const Exponent& e) const;

  int rank_;
  Terms terms_;
};

std::string render(const MultiLaurent& p);

}  // namespace compres
