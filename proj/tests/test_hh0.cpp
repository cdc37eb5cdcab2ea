#include <doctest.h>

#include "compres/hh0.hpp"
#include "compres/oracles/hh0_oracle.hpp"
#include "compres/suites.hpp"

using namespace compres;

namespace {

HeckeElement basis_of(const char* word) { return HeckeElement::basis(parse_word(word)); }
LaurentQ qp(int e = 1) { return LaurentQ::q_power(e); }
const LaurentQ one(1);

}  // namespace

TEST_CASE("reduction examples") {
  CHECK(reduce_to_hh0(basis_of("ts")) == HH0Class::e_n(1));
  CHECK(reduce_to_hh0(t_mul(basis_of("s"), basis_of("t")) - t_mul(basis_of("t"), basis_of("s"))).is_zero());
  CHECK(reduce_to_hh0(basis_of("sts")) == HH0Class::e_n(1, qp() - one) + HH0Class::tt(qp()));
  CHECK(reduce_to_hh0(basis_of("e")) == HH0Class::e_n(0));
}

TEST_CASE("canonical basis elements are fixed") {
  CHECK(reduce_to_hh0(basis_of("s")) == HH0Class::ts());
  CHECK(reduce_to_hh0(basis_of("t")) == HH0Class::tt());
  for (int n = 0; n <= 20; ++n)
    CHECK(reduce_to_hh0(HeckeElement::basis(WeylWord::st_power(n))) == HH0Class::e_n(n));
  for (int n = 1; n <= 20; ++n)
    CHECK(reduce_to_hh0(HeckeElement::basis(WeylWord::ts_power(n))) == HH0Class::e_n(n));
}

TEST_CASE("odd words of the two shapes have different classes") {
  // s(ts)^m and t(st)^m are not conjugate by a length-additive rotation;
  // their classes differ in the [Ts]/[Tt] component.
  for (int m = 1; m <= 6; ++m) {
    const HH0Class a = reduce_to_hh0(HeckeElement::basis(WeylWord{Letter::S, 2 * m + 1}));
    const HH0Class b = reduce_to_hh0(HeckeElement::basis(WeylWord{Letter::T, 2 * m + 1}));
    CHECK_FALSE(a == b);
    CHECK(a.coeff_s() == b.coeff_t());
    CHECK(a.coeff_t() == b.coeff_s());
  }
}

TEST_CASE("trace property on random pairs") {
  verify::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    const HeckeElement a = verify::random_element(rng, 8);
    const HeckeElement b = verify::random_element(rng, 8);
    CHECK(reduce_to_hh0(t_mul(a, b)) == reduce_to_hh0(t_mul(b, a)));
  }
}

TEST_CASE("linearity") {
  verify::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const HeckeElement a = verify::random_element(rng, 8);
    const HeckeElement b = verify::random_element(rng, 8);
    const LaurentQ c = Rational(rng.between(1, 4)) * qp(rng.between(-3, 3)) - one;
    CHECK(reduce_to_hh0(c * a + b) == hh0_scale(c, reduce_to_hh0(a)) + reduce_to_hh0(b));
  }
}

TEST_CASE("agreement with the commutator-space oracle") {
  const oracles::HH0Oracle oracle(8);
  CHECK(oracle.commutator_count() > 0);
  for (int len = 0; len <= 8; ++len)
    for (Letter g : {Letter::S, Letter::T}) {
      const WeylWord w = len == 0 ? WeylWord{} : WeylWord{g, len};
      const HeckeElement a = HeckeElement::basis(w);
      const auto expected = oracle.classify(a);
      CHECK_MESSAGE(oracles::HH0Oracle::agrees(expected, reduce_to_hh0(a)), w.str());
    }
  CHECK_THROWS_AS(oracle.classify(HeckeElement::basis(WeylWord{Letter::S, 11})), std::out_of_range);
}

TEST_CASE("oracle frozen values") {
  const oracles::HH0Oracle oracle(4);
  const auto sts = oracle.classify(basis_of("sts"));
  CHECK(hh0_scale(sts.scale, HH0Class::e_n(1, qp() - one) + HH0Class::tt(qp())) == sts.scaled);
  const auto tsts = oracle.classify(basis_of("tsts"));
  CHECK(hh0_scale(tsts.scale, HH0Class::e_n(2)) == tsts.scaled);
}

TEST_CASE("class arithmetic and rendering") {
  const HH0Class x = HH0Class::e_n(2, qp()) + HH0Class::ts(-one) + HH0Class::e_n(0);
  CHECK(render(x) == "[E(0)] + q*[E(2)] - [Ts]");
  CHECK((x - x).is_zero());
  CHECK(render(HH0Class{}) == "0");
  CHECK(x.coeff_e(2) == qp());
  CHECK(x.coeff_e(1).is_zero());
  CHECK_THROWS_AS(HH0Class::e_n(-1), std::invalid_argument);
  CHECK(hh0_scale(LaurentQ(), x).is_zero());
  CHECK((-x) + x == HH0Class{});
  CHECK(render(HH0Class::e_n(1, qp() - one) + HH0Class::tt(qp())) == "(-1 + q)*[E(1)] + q*[Tt]");
}
