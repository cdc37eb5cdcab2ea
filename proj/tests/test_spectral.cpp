#include <doctest.h>

#include "compres/expr.hpp"
#include "compres/spectral.hpp"

using namespace compres;

namespace {

LaurentQ qp(int e = 1) { return LaurentQ::q_power(e); }
const LaurentQ one(1);
LambdaElement lam(int n, const LaurentQ& c = LaurentQ(1)) { return LambdaElement::power(n, c); }

}  // namespace

TEST_CASE("pind") {
  CHECK(pind_map(lam(0)) == HH0Class::e_n(0));
  CHECK(pind_map(lam(-1)) == HH0Class::e_n(1, qp(-1)));
  const LaurentQ c = one - qp(-1);
  CHECK(pind_map(lam(1)) == HH0Class::e_n(1, qp(-1)) - HH0Class::ts(c) - HH0Class::tt(c) +
                              HH0Class::e_n(0, (qp() - one) * (qp() - one) * qp(-1)));
  CHECK(pres_map(pind_map(lam(1))) == lam(1) + lam(-1));
}

TEST_CASE("opind") {
  CHECK(opind_map(lam(0)) == HH0Class::e_n(0));
  CHECK(opind_map(lam(2)) == HH0Class::e_n(2, qp(-2)));
  const HH0Class x = opind_map(lam(-1));
  CHECK(x == hh0_scale(qp(), reduce_to_hh0(t_inverse(parse_word("st")))));
  CHECK(pres_map(x) == lam(1) + lam(-1));
}

TEST_CASE("homomorphisms before reduction") {
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      CHECK(t_mul(pind_image(lam(m)), pind_image(lam(n))) == pind_image(lam(m + n)));
      CHECK(t_mul(opind_image(lam(m)), opind_image(lam(n))) == opind_image(lam(m + n)));
    }
}

TEST_CASE("pres") {
  CHECK(pres_map(HH0Class::ts()) == lam(0, qp() - one));
  CHECK(pres_map(HH0Class::tt()) == lam(0, qp() - one));
  CHECK(pres_map(HH0Class::e_n(2)) == lam(2, qp(2)) + lam(-2, qp(2)));
  CHECK(pres_map(HH0Class::e_n(0)) == lam(0, 2));
  CHECK(pres_map(HH0Class{}).is_zero());
}

TEST_CASE("1_Mc and chi_M") {
  CHECK(one_mc(lam(3) + lam(0, 5)) == lam(0, 5));
  CHECK(one_mc(lam(-2)).is_zero());
  CHECK(one_mc(LambdaElement{}).is_zero());
  CHECK(chi_m(lam(2) + lam(0) + lam(-1)) == lam(2));
  CHECK(chi_m(lam(-5)).is_zero());
  CHECK(chi_m(LambdaElement{}).is_zero());
}

TEST_CASE("1_Gc on the basis") {
  CHECK(one_gc(HH0Class::ts()) == HH0Class::ts());
  CHECK(one_gc(HH0Class::tt()) == HH0Class::tt());
  CHECK(one_gc(HH0Class::e_n(0)) == HH0Class::e_n(0));
  for (int n = 1; n <= 20; ++n) CHECK(one_gc(HH0Class::e_n(n)).is_zero());
}

TEST_CASE("pres after pind and opind") {
  for (int n = -20; n <= 20; ++n) {
    CHECK(pres_map(pind_map(lam(n))) == lam(n) + lam(-n));
    CHECK(pres_map(opind_map(lam(n))) == lam(n) + lam(-n));
  }
}

TEST_CASE("commutator") {
  CHECK(commutator_direct(0).is_zero());
  CHECK(commutator_direct(-2).is_zero());
  const LaurentQ qm1 = qp() - one;
  const HH0Class n1 = HH0Class::e_n(0, qm1 * qm1 * qp(-1)) - HH0Class::ts(qm1 * qp(-1)) - HH0Class::tt(qm1 * qp(-1));
  CHECK(commutator_direct(1) == n1);
  CHECK(commutator_closed_form(1) == n1);
  CHECK(commutator_closed_form(0).is_zero());
  for (int n = -5; n <= 12; ++n) {
    CHECK(commutator_direct(n) == commutator_closed_form(n));
    CHECK(commutator_direct(n) == commutator_via_chi(n));
  }
}

TEST_CASE("R_1,(st)^n closed form") {
  CHECK(r_identity_closed_form(2) == (qp() - one) * (qp(3) - qp(2) + qp() - one));
  for (int n = 1; n <= 20; ++n)
    CHECK(r_polynomial(WeylWord{}, WeylWord::st_power(n)) == r_identity_closed_form(n));
}

TEST_CASE("lambda rendering round trip") {
  const LambdaElement x = lam(2, qp(2)) + lam(-2, qp(2)) - lam(0, ratio(1, 3));
  CHECK(render(x) == "q^2*L^-2 - 1/3*L^0 + q^2*L^2");
  CHECK(parse_lambda(render(x)) == x);
  CHECK(render(LambdaElement{}) == "0");
}
