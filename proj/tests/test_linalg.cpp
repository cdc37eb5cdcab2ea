#include <doctest.h>

#include "compres/linalg.hpp"

using namespace compres;
using namespace compres::linalg;

namespace {

SparseMatrix from_dense(int rows, const std::vector<std::vector<int>>& cols) {
  SparseMatrix m{rows, {}};
  for (const auto& c : cols) {
    SparseVector v;
    for (int i = 0; i < rows; ++i)
      if (c[i] != 0) v.emplace(i, c[i]);
    m.cols.push_back(v);
  }
  return m;
}

}  // namespace

TEST_CASE("rank and kernel") {
  const SparseMatrix m = from_dense(3, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}});
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(m.apply(v).empty());
  CHECK(rank(SparseMatrix{4, {}}) == 0);
  CHECK(rank(identity_matrix(5)) == 5);
}

TEST_CASE("rank is independent of orientation") {
  const SparseMatrix wide = from_dense(2, {{1, 0}, {0, 1}, {1, 1}, {2, 3}, {5, 7}});
  CHECK(rank(wide) == 2);
  const SparseMatrix tall = from_dense(5, {{1, 0, 1, 2, 5}, {0, 1, 1, 3, 7}});
  CHECK(rank(tall) == 2);
}

TEST_CASE("echelon tracking") {
  Echelon e(3, true);
  CHECK(e.insert({{0, Rational(1)}, {1, Rational(1)}}, 0));
  CHECK(e.insert({{1, Rational(1)}}, 1));
  SparseVector dep;
  CHECK_FALSE(e.insert({{0, Rational(2)}, {1, Rational(5)}}, 2, &dep));
  // e_2 - 2 e_0 - 3 e_1 is the relation.
  CHECK(dep == SparseVector{{0, Rational(-2)}, {1, Rational(-3)}, {2, Rational(1)}});
  CHECK(e.contains({{0, Rational(1)}}));
  CHECK_FALSE(e.contains({{2, Rational(1)}}));
}

TEST_CASE("composition and arithmetic") {
  const SparseMatrix a = from_dense(2, {{1, 1}, {0, 1}});
  const SparseMatrix b = from_dense(2, {{0, 1}, {1, 0}});
  const SparseMatrix ab = compose(a, b);
  CHECK(ab == from_dense(2, {{0, 1}, {1, 1}}));
  CHECK(is_zero(a - a));
  CHECK(a + a == from_dense(2, {{2, 2}, {0, 2}}));
}

TEST_CASE("homology of a circle") {
  // Two vertices, two edges between them.
  const SparseMatrix d1 = from_dense(2, {{-1, 1}, {-1, 1}});
  const SparseMatrix d0{0, std::vector<SparseVector>(2)};
  const SparseMatrix d2{2, {}};
  const Homology h0(d1, d0);
  const Homology h1(d2, d1);
  CHECK(h0.dim() == 1);
  CHECK(h1.dim() == 1);
  CHECK(h1.dim_cycles() == 1);
  CHECK(h0.dim_boundaries() == 1);
  CHECK_THROWS(h1.coordinates({{0, Rational(1)}}));
  const auto c = h1.coordinates({{0, Rational(3)}, {1, Rational(-3)}});
  CHECK(c.size() == 1);
  CHECK(c[0] != 0);
}

TEST_CASE("induced maps") {
  // Identity chain map on a complex with H = Q^2.
  const SparseMatrix zero_in{3, {}};
  const SparseMatrix out{0, std::vector<SparseVector>(3)};
  const SparseMatrix in = from_dense(3, {{1, 1, 0}});
  const Homology h(in, out);
  CHECK(h.dim() == 2);
  const DenseMatrix id = induced_map(h, h, identity_matrix(3));
  CHECK(rank(id) == 2);
  CHECK((id * id - id).is_zero());
  const Homology full(zero_in, out);
  const DenseMatrix proj = induced_map(full, h, identity_matrix(3));
  CHECK(proj.rows == 2);
  CHECK(proj.cols == 3);
  CHECK(rank(proj) == 2);
}

TEST_CASE("dense rank") {
  DenseMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = ratio(1, 2);
  m.at(2, 0) = 2;
  CHECK(rank(m) == 2);
  CHECK(rank(DenseMatrix(0, 4)) == 0);
  CHECK(DenseMatrix(2, 2).is_zero());
}
