#include <doctest.h>

#include "spencerlab/errors.hpp"
#include "spencerlab/matrix.hpp"
#include "support.hpp"

using namespace spencerlab;

TEST_CASE("parse and print round trip") {
  RingPtr ring = make_ring({"x", "y"}, {2, 3});
  for (const char* text : {"x^3 - y^2", "1", "0", "-x", "1/2*x*y + 3", "x^2*y^2 - 2*x*y + 1", "-3/4*y^3"}) {
    const Polynomial p = parse_polynomial(text, ring);
    CHECK(parse_polynomial(p.to_string(), ring) == p);
  }
  CHECK(parse_polynomial("x^3 - y^2", ring).to_string() == "x^3 - y^2");
  CHECK(parse_polynomial("(x+1)^2", ring) == parse_polynomial("x^2 + 2*x + 1", ring));
  CHECK(parse_polynomial("2*(x - y) - 2*x", ring) == parse_polynomial("-2*y", ring));
}

TEST_CASE("parse errors carry the offending position") {
  RingPtr ring = make_ring({"x", "y"}, {1, 1});
  CHECK_THROWS_AS(parse_polynomial("x + z", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-1", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x", ring), ParseError);
  try {
    parse_polynomial("x + z", ring);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("weights") {
  RingPtr ring = make_ring({"x", "y"}, {2, 3});
  CHECK(weighted_degree(parse_polynomial("x^3 - y^2", ring)) == 6);
  CHECK_FALSE(weighted_degree(parse_polynomial("x + y", ring)).has_value());
  CHECK_THROWS_AS(weighted_degree(Polynomial(ring)), InputError);
  CHECK(ring->monomials_of_weight(6).size() == 2);  // x^3, y^2
  CHECK(ring->monomials_of_weight(1).empty());
  CHECK_THROWS_AS(make_ring({"x"}, {0}), InputError);
  CHECK_THROWS_AS(make_ring({"x", "x"}, {1, 1}), InputError);
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
  RingPtr ring = make_ring({"x", "y", "z"}, {1, 2, 1});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Polynomial a = testing::random_polynomial(ring, rng);
    const Polynomial b = testing::random_polynomial(ring, rng);
    const Polynomial c = testing::random_polynomial(ring, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(partial_derivative(a * b, j) == partial_derivative(a, j) * b + a * partial_derivative(b, j));
    CHECK(partial_derivative(partial_derivative(a, 0), 1) == partial_derivative(partial_derivative(a, 1), 0));
  }
}

TEST_CASE("Euler identity for weighted-homogeneous polynomials") {
  RingPtr ring = make_ring({"x", "y"}, {4, 3});
  const Polynomial f = parse_polynomial("x^3 + y^4", ring);
  Polynomial xi_f(ring);
  for (std::size_t j = 0; j < 2; ++j)
    xi_f += Polynomial::variable(ring, j) * partial_derivative(f, j) * Rational(ring->weight(j));
  CHECK(xi_f == f * Rational(12));
}

TEST_CASE("exact rank, kernel and image") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  const RankKernelImage rki = rank_kernel_image(m);
  CHECK(rki.rank == 2);
  REQUIRE(rki.kernel_basis.size() == 1);
  const Vector image = m.apply(rki.kernel_basis[0]);
  CHECK(std::all_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) == 0; }));
  const Matrix inv = inverse(Matrix::from_rows({{2, 1}, {1, 1}}, 2));
  CHECK(inv == Matrix::from_rows({{1, -1}, {-1, 2}}, 2));
  CHECK_THROWS_AS(inverse(m), InputError);
}

TEST_CASE("both elimination paths agree, and rank-nullity holds") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), shape(1, 9), sparse(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = shape(rng), c = shape(rng);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (sparse(rng) == 0) m(i, j) = Rational(entry(rng)) / (1 + (i + j) % 2);
    // duplicate a row now and then to force dependence
    if (r > 1 && trial % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    const RowEchelon a = row_reduce(m, Elimination::Bareiss);
    const RowEchelon b = row_reduce(m, Elimination::Sparse);
    CHECK(a.pivots == b.pivots);
    CHECK(a.reduced == b.reduced);
    const RankKernelImage rki = rank_kernel_image(m);
    CHECK(rki.rank + rki.kernel_basis.size() == c);
    CHECK(rki.image_basis.size() == rki.rank);
  }
}

TEST_CASE("subspace reducer") {
  const SubspaceReducer red(Matrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 3));
  CHECK(red.quotient_dim() == 1);
  CHECK(red.contains(Vector{1, 0, -1}));
  CHECK_FALSE(red.contains(Vector{1, 0, 0}));
  CHECK(red.quotient_coordinates(Vector{1, 0, -1}) == Vector{0});
}
