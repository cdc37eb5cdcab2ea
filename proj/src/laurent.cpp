#include "compres/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace compres {

std::string render_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_start) throw bad();
  if (pos < text.size()) {
    if (text[pos] != '/') throw bad();
    const size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) throw bad();
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

Rational ratio(long n, long d) {
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

LaurentQ::LaurentQ(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentQ LaurentQ::monomial(const Rational& c, int exponent) {
  LaurentQ p;
  p.add_term(exponent, c);
  return p;
}

int LaurentQ::min_degree() const {
  if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentQ::max_degree() const {
  if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentQ::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentQ::evaluate(const Rational& x) const {
  if (x == 0 && !terms_.empty() && terms_.begin()->first < 0) throw DivisionByZero();
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    Rational base = e >= 0 ? x : Rational(1 / x);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

void LaurentQ::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) {
  *this = *this * other;
  return *this;
}

LaurentQ& LaurentQ::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Rational(ca * cb));
  return out;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentQ divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  // Leading-term elimination from the top.  Since q is a unit, a quotient
  // exists iff the remainder vanishes before its top degree falls below
  // b.min_degree() + (a.min_degree() - b.min_degree()).
  const int b_top = b.max_degree();
  const Rational& b_lead = b.terms().rbegin()->second;
  const int floor = a.min_degree() - b.min_degree();
  LaurentQ remainder = a;
  LaurentQ quotient;
  while (!remainder.is_zero()) {
    const int shift = remainder.max_degree() - b_top;
    if (shift < floor) {
      throw NotDivisible("no Laurent quotient of " + render(a) + " by " + render(b));
    }
    Rational c = remainder.terms().rbegin()->second / b_lead;
    quotient.add_term(shift, c);
    remainder -= LaurentQ::monomial(c, shift) * b;
  }
  return quotient;
}

namespace {

std::string monomial_body(int e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

// Magnitude of one term without sign, e.g. "3/2*q^2", "q", "1".
std::string term_magnitude(const Rational& abs_c, const std::string& body) {
  if (body.empty()) return render_rational(abs_c);
  if (abs_c == 1) return body;
  return render_rational(abs_c) + "*" + body;
}

void append_signed(std::string& out, bool negative, const std::string& magnitude) {
  if (out.empty()) {
    out = negative ? "-" + magnitude : magnitude;
  } else {
    out += negative ? " - " : " + ";
    out += magnitude;
  }
}

}  // namespace

std::string render(const LaurentQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    append_signed(out, c < 0, term_magnitude(mag, monomial_body(e)));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentQ& p) { return os << render(p); }

std::string render_combination(
    const std::vector<std::pair<LaurentQ, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, token] : terms) {
    if (coeff.is_zero()) continue;
    if (coeff.is_unit()) {
      const auto& [e, c] = *coeff.terms().begin();
      Rational mag = abs(c);
      std::string body = monomial_body(e);
      std::string magnitude;
      if (body.empty() && mag == 1)
        magnitude = token;
      else
        magnitude = term_magnitude(mag, body) + "*" + token;
      append_signed(out, c < 0, magnitude);
    } else {
      append_signed(out, false, "(" + render(coeff) + ")*" + token);
    }
  }
  return out.empty() ? "0" : out;
}

MultiLaurent::MultiLaurent(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("MultiLaurent rank must be positive");
}

MultiLaurent MultiLaurent::monomial(int rank, const Rational& c, Exponent exponent) {
  MultiLaurent p(rank);
  p.add_term(exponent, c);
  return p;
}

void MultiLaurent::check_exponent(const Exponent& e) const {
  if (static_cast<int>(e.size()) != rank_)
    throw std::invalid_argument("exponent vector length does not match rank");
}

Rational MultiLaurent::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiLaurent::add_term(const Exponent& exponent, const Rational& c) {
  check_exponent(exponent);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch");
  MultiLaurent out(a.rank_);
  MultiLaurent::Exponent e(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int j = 0; j < a.rank_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, Rational(ca * cb));
    }
  return out;
}

std::string render(const MultiLaurent& p) {
  std::vector<std::pair<LaurentQ, std::string>> terms;
  for (const auto& [e, c] : p.terms()) {
    std::ostringstream token;
    token << "L^(";
    for (size_t j = 0; j < e.size(); ++j) token << (j ? "," : "") << e[j];
    token << ")";
    terms.emplace_back(LaurentQ(c), token.str());
  }
  return render_combination(terms);
}

}  // namespace compres
