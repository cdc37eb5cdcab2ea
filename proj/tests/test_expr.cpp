#include <doctest.h>

#include "compres/expr.hpp"
#include "compres/suites.hpp"

using namespace compres;

namespace {

LaurentQ qp(int e = 1) { return LaurentQ::q_power(e); }
const LaurentQ one(1);
HeckeElement basis_of(const char* word) { return HeckeElement::basis(parse_word(word)); }

std::size_t error_position(std::string_view text) {
  try {
    parse_hecke(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("Laurent polynomials") {
  CHECK(parse_laurent("q") == qp());
  CHECK(parse_laurent("q^-2") == qp(-2));
  CHECK(parse_laurent("(q - 1) + 1") == qp());
  CHECK(parse_laurent("3/4*q^2 - q") == ratio(3, 4) * qp(2) - qp());
  CHECK(parse_laurent("-1 + q") == qp() - one);
  CHECK(parse_laurent("-(q - 1)") == one - qp());
  CHECK(parse_laurent("(q-1)*(q-1)") == (qp() - one) * (qp() - one));
  CHECK(parse_laurent("2*3 + 1") == LaurentQ(7));
  CHECK(parse_laurent("0").is_zero());
}

TEST_CASE("precedence") {
  CHECK(parse_laurent("1 - q*q") == one - qp(2));
  CHECK(parse_laurent("-q*q") == -qp(2));
  CHECK(parse_laurent("1 - 2 - 3") == LaurentQ(-4));
}

TEST_CASE("Hecke expressions") {
  CHECK(parse_hecke("T[ts]") == basis_of("ts"));
  CHECK(parse_hecke("T[s]*T[s]") == t_mul(basis_of("s"), basis_of("s")));
  CHECK(parse_hecke("T[s]*T[t] - T[t]*T[s]") == basis_of("st") - basis_of("ts"));
  CHECK(parse_hecke("(q - 1)*T[e] + q^-1*T[sts]") == (qp() - one) * basis_of("e") + qp(-1) * basis_of("sts"));
  CHECK(parse_hecke("2") == LaurentQ(2) * basis_of("e"));
}

TEST_CASE("HH0 and lambda expressions") {
  CHECK(parse_hh0("[E(3)] + q*[Ts]") == HH0Class::e_n(3) + HH0Class::ts(qp()));
  CHECK(parse_hh0("[Tt] - [Tt]").is_zero());
  CHECK(parse_lambda("L^2 + L^-2") == LambdaElement::power(2) + LambdaElement::power(-2));
  CHECK(parse_lambda("3") == LambdaElement::power(0, LaurentQ(3)));
  CHECK_THROWS_AS(parse_hh0("[E(-1)]"), ParseError);
  CHECK_THROWS_AS(parse_hh0("[Tx]"), ParseError);
  CHECK_THROWS_AS(parse_hh0("[Ts]*[Tt]"), ParseError);
}

TEST_CASE("errors carry positions") {
  CHECK(error_position("T[ss]") == 2);
  CHECK(error_position("T[s] +") == 6);
  CHECK(error_position("T[s] ) ") == 5);
  CHECK(error_position("(T[s]") == 5);
  CHECK(error_position("1/0") != std::string::npos);
  CHECK_THROWS_AS(parse_laurent("q^"), ParseError);
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("x"), ParseError);
  CHECK_THROWS_AS(parse_hecke("T[s]*T[s]*"), ParseError);
}

TEST_CASE("render and parse round trip") {
  verify::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const HeckeElement a = verify::random_element(rng, 7);
    CHECK(parse_hecke(render(a)) == a);
    const HH0Class x = reduce_to_hh0(a);
    CHECK(parse_hh0(render(x)) == x);
  }
  for (int e = -4; e <= 4; ++e) {
    const LaurentQ p = ratio(e, 3) * qp(e) - qp(-e) + one;
    CHECK(parse_laurent(render(p)) == p);
  }
}
