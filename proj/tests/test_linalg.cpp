#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "singequiv/linalg.hpp"

#include <random>

using namespace singequiv;

namespace {

Matrix int_matrix(const Field& f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_integer(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  const Field q = Field::rationals();
  CHECK(q.parse("3/4") + q.parse("1/4") == 1);
  CHECK(q.format(q.parse("-6/4")) == "-3/2");
  CHECK(q.name() == "Q");

  const Field f7 = Field::prime(7);
  CHECK(f7.name() == "F7");
  CHECK(f7.mul(f7.from_integer(3), f7.inv(f7.from_integer(3))) == 1);
  CHECK(f7.from_integer(-1) == 6);
  CHECK(f7.parse("1/2") == 4);
  CHECK_THROWS_AS(Field::prime(4), LinalgError);
  CHECK_THROWS_AS(Field::prime(1), LinalgError);
  CHECK_THROWS_AS(f7.parse("1/7"), LinalgError);
  CHECK_THROWS_AS(q.parse("x"), LinalgError);
  CHECK_THROWS_AS(q.inv(0), LinalgError);
}

TEST_CASE("rref, rank and kernel on a fixed matrix") {
  const Field q = Field::rationals();
  const Matrix m = int_matrix(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  const Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK((m * k.vector(0)) == zero_vector(3));

  // over F2 the second row vanishes and the first equals the third
  CHECK(rank(int_matrix(Field::prime(2), {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 1);
  CHECK(rank(int_matrix(Field::prime(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(int_matrix(q, {{1, 1}, {1, -1}})) == 2);
  CHECK(rank(int_matrix(Field::prime(2), {{1, 1}, {1, -1}})) == 1);
}

TEST_CASE("solve") {
  const Field q = Field::rationals();
  const Matrix m = int_matrix(q, {{2, 0}, {0, 3}, {1, 1}});
  auto x = solve(m, {q.from_integer(2), q.from_integer(3), q.from_integer(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(m, {q.from_integer(2), q.from_integer(3), q.from_integer(5)}).has_value());
}

TEST_CASE("subspace identity is basis independent") {
  const Field q = Field::rationals();
  const Subspace a = Subspace::span(q, 3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(q, 3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(a == b);
  CHECK(a.contains(Vector{3, 5, 2}));
  CHECK_FALSE(a.contains(Vector{1, 0, 0}));
  const Vector c = a.coordinates(Vector{3, 5, 2});
  Vector back = zero_vector(3);
  for (std::size_t k = 0; k < c.size(); ++k) axpy(q, back, c[k], a.vector(k));
  CHECK(back == Vector{3, 5, 2});
  CHECK((a + Subspace::span(q, 3, {{0, 0, 1}})).dim() == 3);
}

TEST_CASE("kronecker") {
  const Field q = Field::rationals();
  const Matrix a = int_matrix(q, {{1, 2}, {3, 4}});
  const Matrix i = Matrix::identity(q, 2);
  const Matrix k = kronecker(a, i);
  CHECK(k.rows() == 4);
  CHECK(k(0, 2) == 2);
  CHECK(k(1, 3) == 2);
  CHECK(k(2, 0) == 3);
  // (A (x) B)(C (x) D) = AC (x) BD
  const Matrix b = int_matrix(q, {{0, 1}, {1, 1}});
  CHECK(kronecker(a, b) * kronecker(b, a) == kronecker(a * b, b * a));
}

TEST_CASE("property: ranks agree with the int64 oracle over F_p") {
  std::mt19937_64 gen(7);
  for (std::uint32_t p : {2u, 3u, 101u}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + gen() % 7, c = 1 + gen() % 7;
      Matrix m(f, r, c);
      std::vector<oracle::Vec> rows(r, oracle::Vec(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          // sparse-ish entries make rank deficiency common
          const long v = gen() % 3 == 0 ? static_cast<long>(gen() % p) : 0;
          m(i, j) = f.from_integer(v);
          rows[i][j] = v;
        }
      const std::size_t rk = rank(m);
      CHECK(rk == oracle::rank_of(rows, p, c));
      CHECK(rk + kernel(m).dim() == c);
      CHECK(rank(m.transpose()) == rk);
    }
  }
}

TEST_CASE("property: rational rank-nullity and kernel correctness") {
  std::mt19937_64 gen(11);
  const Field q = Field::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + gen() % 6, c = 1 + gen() % 6;
    Matrix m(q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(static_cast<long>(gen() % 5) - 2, 1 + gen() % 3);
    const Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m * k.vector(i)));
  }
}
