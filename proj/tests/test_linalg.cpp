#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/linalg.hpp"

#include <random>

using namespace hopfkit;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rat(num(rng), den(rng));
  return m;
}

Vec v(std::initializer_list<int> xs) {
  Vec r;
  for (int x : xs) r.push_back(Rat(x));
  return r;
}

}  // namespace

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(rat(3, 4)) == "3/4");
  CHECK(rat_to_string(rat(-8, 2)) == "-4");
  CHECK(rat(-8, 2) == Rat(-4));
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
  CHECK(rat_from_string("3/4") == rat(3, 4));
  CHECK(rat_from_string("-10/15") == rat(-2, 3));  // canonicalized
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("0") == 0);
  for (const char* bad : {"", "-", "1.5", "1/0", "1/-2", "+3", " 1", "1 ", "2/", "/3", "a"})
    CHECK_THROWS_AS(rat_from_string(bad), std::invalid_argument);
}

TEST_CASE("matrix product: OpenMP kernel agrees with serial reference") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::size_t r = dim(rng), k = dim(rng), c = dim(rng);
    Matrix x = random_matrix(rng, r, k), y = random_matrix(rng, k, c);
    CHECK(x.mul(y) == x.mul_serial(y));
  }
  Matrix m = random_matrix(rng, 7, 7);
  CHECK(m * Matrix::identity(7) == m);
  CHECK(Matrix::identity(7) * m == m);
}

TEST_CASE("transpose and apply") {
  Matrix m = Matrix::from_rows(3, {v({1, 2, 3}), v({4, 5, 6})});
  CHECK(m.transpose() == Matrix::from_cols(3, {v({1, 2, 3}), v({4, 5, 6})}));
  CHECK(m.apply(v({1, 0, -1})) == v({-2, -2}));
}

TEST_CASE("rref: hand-checked 3x4 system") {
  // rows: [1 2 1 4; 2 4 0 6; 0 0 1 1]; rank 2, pivots at columns 0 and 2.
  Matrix m = Matrix::from_rows(4, {v({1, 2, 1, 4}), v({2, 4, 0, 6}), v({0, 0, 1, 1})});
  Rref r = rref(m);
  CHECK(r.rank() == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  Matrix expect = Matrix::from_rows(4, {v({1, 2, 0, 3}), v({0, 0, 1, 1}), v({0, 0, 0, 0})});
  CHECK(r.m == expect);
}

TEST_CASE("rref agrees with serial reference and is idempotent") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    Matrix m = random_matrix(rng, dim(rng), dim(rng));
    Rref a = rref(m), b = rref_serial(m);
    CHECK(a.m == b.m);
    CHECK(a.pivots == b.pivots);
    CHECK(rref(a.m).m == a.m);
  }
}

TEST_CASE("rank via constructed deficiency") {
  // Third row = row0 + 2*row1.
  Matrix m = Matrix::from_rows(3, {v({1, 0, 2}), v({0, 1, -1}), v({1, 2, 0})});
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(Matrix(3, 4)) == 0);
}

TEST_CASE("solve_linear: representative has free variables zero") {
  // x1 + 2x2 = 3 with x2 free.
  Matrix A = Matrix::from_rows(2, {v({1, 2})});
  auto x = solve_linear(A, v({3}));
  REQUIRE(x.has_value());
  CHECK(*x == v({3, 0}));

  // Inconsistent: 0 = 1.
  Matrix B = Matrix::from_rows(1, {v({0})});
  CHECK(!solve_linear(B, v({1})).has_value());

  // Unique solution, rational entries.
  Matrix C = Matrix::from_rows(2, {v({2, 0}), v({0, 3})});
  auto y = solve_linear(C, v({1, 1}));
  REQUIRE(y.has_value());
  CHECK(*y == Vec{rat(1, 2), rat(1, 3)});
}

TEST_CASE("solve_linear_many matches columnwise solves") {
  std::mt19937 rng(4242);
  Matrix A = random_matrix(rng, 6, 4);
  Matrix X0 = random_matrix(rng, 4, 3);
  Matrix B = A * X0;
  auto X = solve_linear_many(A, B);
  REQUIRE(X.has_value());
  CHECK(A * *X == B);
  for (std::size_t j = 0; j < 3; ++j) {
    auto xj = solve_linear(A, B.col(j));
    REQUIRE(xj.has_value());
    CHECK(*xj == X->col(j));
  }
}

TEST_CASE("nullspace basis is deterministic and annihilated") {
  Matrix A = Matrix::from_rows(4, {v({1, 2, 1, 4}), v({2, 4, 0, 6})});
  auto ns = nullspace(A);
  REQUIRE(ns.size() == 2);
  // Free columns are 1 and 3; each basis vector sets its free variable to 1.
  CHECK(ns[0] == v({-2, 1, 0, 0}));
  CHECK(ns[1] == v({-3, 0, -1, 1}));
  for (const Vec& x : ns) CHECK(vec_is_zero(A.apply(x)));
  CHECK(nullspace(Matrix::identity(3)).empty());
}

TEST_CASE("subspace arithmetic") {
  Subspace x = Subspace::from_vectors(3, {v({1, 0, 0}), v({0, 1, 0})});
  Subspace y = Subspace::from_vectors(3, {v({0, 1, 0}), v({0, 0, 1})});
  CHECK(x.dim() == 2);
  CHECK(subspace_sum(x, y).dim() == 3);
  Subspace both = subspace_intersect(x, y);
  CHECK(both.dim() == 1);
  CHECK(both.contains(v({0, 5, 0})));

  // Same span, different presentation.
  Subspace x2 = Subspace::from_vectors(3, {v({1, 1, 0}), v({1, -1, 0})});
  CHECK(subspace_equal(x, x2));
  CHECK(!subspace_equal(x, y));

  CHECK_THROWS_AS(Subspace::from_vectors(2, {v({1, 1}), v({2, 2})}), std::invalid_argument);
}

TEST_CASE("span membership returns coordinates in the given family") {
  std::vector<Vec> fam = {v({1, 1}), v({1, -1})};
  auto c = span_membership(fam, v({1, 0}));
  REQUIRE(c.has_value());
  CHECK(*c == Vec{rat(1, 2), rat(1, 2)});

  // Dependent family: first solution under the fixed pivot rule.
  std::vector<Vec> dep = {v({1, 0}), v({2, 0}), v({0, 1})};
  auto d = span_membership(dep, v({3, 1}));
  REQUIRE(d.has_value());
  CHECK(*d == v({3, 0, 1}));

  CHECK(!span_membership({v({1, 0})}, v({0, 1})).has_value());
}

TEST_CASE("sparse permutation-shaped systems reduce exactly") {
  // Permutation matrix plus one dense row; rank stays full.
  std::size_t n = 40;
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, (i * 7 + 3) % n) = 1;
  for (std::size_t j = 0; j < n; ++j) m.at(n - 1, j) = rat(1, (long)j + 1);
  Rref r = rref(m);
  CHECK(r.rank() == n);  // i -> 7i+3 mod 40 is a bijection, dense row covers the gap
  CHECK(rref_serial(m).m == r.m);
}
