#include <doctest.h>

#include "compres/torus.hpp"

using namespace compres;
using namespace compres::torus;

namespace {

LatticeChain chain1(std::vector<int> exps, const Rational& c = 1) {
  Tuple t;
  for (int e : exps) t.push_back({e});
  return LatticeChain::term(1, t, c);
}

LatticeChain chain(int rank, Tuple t, const Rational& c = 1) { return LatticeChain::term(rank, std::move(t), c); }

}  // namespace

TEST_CASE("hochschild boundary") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(hochschild_b(chain1({a, b})).is_zero());
  const LatticeChain c = chain(2, {{1, 0}, {0, 2}, {-1, 1}});
  const LatticeChain expected = chain(2, {{1, 2}, {-1, 1}}) - chain(2, {{1, 0}, {-1, 3}}) + chain(2, {{0, 1}, {0, 2}});
  CHECK(hochschild_b(c) == expected);
  CHECK(hochschild_b(LatticeChain(1, 2)).is_zero());
  CHECK_THROWS(hochschild_b(chain1({4})));
}

TEST_CASE("cyclic operator") {
  CHECK(cyclic_t(chain1({1, 2})) == chain1({2, 1}, -1));
  CHECK(cyclic_t(chain1({3})) == chain1({3}));
  const LatticeChain c = chain1({1, -2, 0, 5}, ratio(2, 3));
  LatticeChain x = c;
  for (int i = 0; i < 4; ++i) x = cyclic_t(x);
  CHECK(x == c);
}

TEST_CASE("Connes operator") {
  for (int a : {-2, -1, 1, 3}) CHECK(connes_B(chain1({a})) == chain1({0, a}));
  CHECK(connes_B(chain1({0})).is_zero());
  CHECK(connes_B(LatticeChain(1, 1)).is_zero());
  const LatticeChain c = chain(2, {{1, 1}, {2, -1}, {0, 3}});
  CHECK(connes_B(connes_B(c)).is_zero());
  CHECK(connes_B(connes_B(chain1({2, -1}))).is_zero());
}

TEST_CASE("normalized mixed complex identities") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        const LatticeChain x = normalize(chain1({a, b, c}));
        if (x.is_zero()) continue;
        CHECK(normalize(hochschild_b(normalize(hochschild_b(x)))).is_zero());
        CHECK((normalize(hochschild_b(connes_B(x))) + connes_B(normalize(hochschild_b(x)))).is_zero());
      }
}

TEST_CASE("hkr") {
  CHECK(hkr(chain1({2, 3})) == TorusForm::term(1, {5}, {0}, 3));
  CHECK(hkr(chain1({-4})) == TorusForm::term(1, {-4}, {}));
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      CHECK(hkr(chain1({a, b}) + chain1({b, a})) == TorusForm::term(1, {a + b}, {0}, a + b));
  // Wedge of two independent differentials, 1/2! normalization.
  CHECK(hkr(chain(2, {{0, 0}, {1, 0}, {0, 1}})) == TorusForm::term(2, {1, 1}, {0, 1}, ratio(1, 2)));
  CHECK(hkr(chain(2, {{0, 0}, {0, 1}, {1, 0}})) == TorusForm::term(2, {1, 1}, {0, 1}, ratio(-1, 2)));
  CHECK(hkr(chain1({0, 1, 1})).is_zero());
}

TEST_CASE("pi0 and de Rham") {
  CHECK(pi0(TorusForm::term(1, {3}, {0})).is_zero());
  const TorusForm inv = TorusForm::term(2, {0, 0}, {0, 1}, 5);
  CHECK(pi0(inv) == inv);
  CHECK(pi0(TorusForm(2, 1)).is_zero());
  CHECK(de_rham_d(TorusForm::term(1, {3}, {})) == TorusForm::term(1, {3}, {0}, 3));
  CHECK(de_rham_d(inv).is_zero());
  const TorusForm f = TorusForm::term(2, {2, -1}, {}, 1) + TorusForm::term(2, {1, 1}, {}, 4);
  CHECK(de_rham_d(de_rham_d(f)).is_zero());
}

TEST_CASE("class action") {
  const LatticeChain balanced = chain1({1, -1});
  CHECK(class_action(true, balanced) == balanced);
  CHECK(class_action(true, chain1({1, 1})).is_zero());
  CHECK(class_action(false, chain1({1, 1})) == chain1({1, 1}));
  const LatticeChain mixed = chain1({2, -2}) + chain1({0, 3}, 7);
  const LatticeChain x = class_action(true, mixed);
  CHECK(x == chain1({2, -2}));
  CHECK(class_action(true, x) == x);
}

TEST_CASE("class action commutes with the structure maps") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const LatticeChain x = chain1({a, b}) + chain1({b, -a}, 2);
      const LatticeChain y = chain1({a, b, -b});
      CHECK(class_action(true, cyclic_t(x)) == cyclic_t(class_action(true, x)));
      CHECK(class_action(true, hochschild_b(y)) == hochschild_b(class_action(true, y)));
      CHECK(class_action(true, connes_B(chain1({a, b}))) == connes_B(class_action(true, chain1({a, b}))));
    }
}

TEST_CASE("windowed tuples") {
  CHECK(windowed_tuples(1, 2, 0).size() == 5);
  CHECK(windowed_tuples(1, 2, 1).size() == 25);
  CHECK(windowed_tuples(2, 1, 1).size() == 81);
}

TEST_CASE("homology squares") {
  const auto r1p0 = homology_square_check(1, 2, 0);
  CHECK(r1p0.pass);
  CHECK(r1p0.dim_cycles == 5);
  CHECK(r1p0.dim_boundaries == 0);
  CHECK(r1p0.dim_invariant == 1);
  REQUIRE(r1p0.b_to_d_constant.has_value());
  CHECK(*r1p0.b_to_d_constant == 1);

  const auto r1p1 = homology_square_check(1, 2, 1);
  CHECK(r1p1.pass);
  CHECK(r1p1.dim_cycles == 25);
  CHECK(r1p1.dim_boundaries == 16);
  CHECK(r1p1.dim_invariant == 1);
  CHECK_FALSE(r1p1.b_to_d_constant.has_value());

  const auto r2p1 = homology_square_check(2, 1, 1);
  CHECK(r2p1.pass);
  CHECK(r2p1.dim_invariant == 2);
  CHECK(r2p1.square_commutes);
  CHECK(r2p1.hkr_kills_boundaries);
  CHECK(r2p1.pi0_kills_B);
  REQUIRE(r2p1.b_to_d_constant.has_value());
  CHECK(*r2p1.b_to_d_constant == 1);

  CHECK_THROWS(homology_square_check(0, 1, 0));
  CHECK_THROWS(homology_square_check(1, 1, 2));
}

TEST_CASE("rendering") {
  CHECK(render(chain1({1, -1}, 2)) == "2*L^(1)(x)L^(-1)");
  CHECK(render(TorusForm::term(2, {0, 1}, {0, 1}, -1)) == "-L^(0,1)*dlog1*dlog2");
  CHECK(render(LatticeChain(1, 0)) == "0");
}
