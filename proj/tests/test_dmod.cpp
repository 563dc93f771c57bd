#include <doctest.h>

#include "spencerlab/dmod.hpp"
#include "spencerlab/errors.hpp"
#include "support.hpp"

using namespace spencerlab;

namespace {

DiffOperator random_operator(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2), terms(1, 3);
  DiffOperator op(ring);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial a(ring->nvars()), b(ring->nvars());
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      a[j] = exp(rng);
      b[j] = exp(rng);
    }
    op.add_term(a, b, coeff(rng));
  }
  return op;
}

}  // namespace

TEST_CASE("Weyl algebra relations") {
  const RingPtr ring = affine_space(2).ring();
  const DiffOperator x = DiffOperator::function(Polynomial::variable(ring, 0));
  const DiffOperator dx = DiffOperator::partial(ring, 0);
  const DiffOperator dy = DiffOperator::partial(ring, 1);
  const DiffOperator one = DiffOperator::function(Polynomial(ring, Rational(1)));
  CHECK(compose(dx, x) - compose(x, dx) == one);
  CHECK(compose(dy, x) == compose(x, dy));
  CHECK(compose(dx, dy) == compose(dy, dx));
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  const DiffOperator x2 = compose(x, x), dx2 = compose(dx, dx);
  CHECK(compose(dx2, x2).to_string() == "x^2*Dx^2 + 4*x*Dx + 2");
  CHECK(compose(dx2, x2).order() == 2);
  CHECK(compose(dx2, x2).weight() == 0);
  CHECK_THROWS_AS(compose(dx2, dx, 2), BudgetExceeded);
}

TEST_CASE("composition is associative and acts as composition of maps") {
  const RingPtr ring = affine_space(2).ring();
  std::mt19937 rng(2024);
  int triples = 0;
  for (; triples < 120; ++triples) {
    const DiffOperator a = random_operator(ring, rng), b = random_operator(ring, rng), c = random_operator(ring, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    const Polynomial p = testing::random_polynomial(ring, rng);
    CHECK(compose(a, b).apply(p) == a.apply(b.apply(p)));
    CHECK(compose(a + b, c) == compose(a, c) + compose(b, c));
  }
  CHECK(triples >= 100);
}

TEST_CASE("augmentation") {
  const RingPtr ring = affine_space(1).ring();
  const DiffOperator x = DiffOperator::function(Polynomial::variable(ring, 0));
  const DiffOperator dx = DiffOperator::partial(ring, 0);
  CHECK(augmentation(compose(dx, x)) == Polynomial(ring, Rational(1)));
  CHECK(augmentation(compose(x, dx)).is_zero());
}

TEST_CASE("filtered Spencer complexes resolve O") {
  for (std::size_t n : {1u, 2u})
    for (int p : {1, 2, 3}) {
      const GradedComplex c = filtered_spencer(n, p);
      check_d_squared(c, 6);
      CHECK(homology_table(c, 6).entries().empty());
    }
  const GradedComplex w = filtered_spencer(testing::corpus("a2_weighted"), 2);
  check_d_squared(w, 6);
  CHECK(homology_table(w, 6).entries().empty());
  CHECK_THROWS_AS(filtered_spencer(1, 0), InputError);
}

TEST_CASE("Kashiwara quotient of the origin in the line") {
  const AffineScene origin = testing::corpus("origin_a1");
  for (int p = 0; p <= 4; ++p) {
    const KashiwaraQuotient q = kashiwara_quotient(origin, p, 8);
    CHECK(q.total_dimension == std::size_t(p + 1));
    CHECK(q.supported_on_subvariety);
    CHECK(q.nilpotency_index >= 1);
    for (const auto& [w, d] : q.dims) CHECK(d == 1);  // d^0 .. d^p, one per weight -p..0
  }
  // a line in the plane: infinitely many x-monomials, graded dims grow with the bound
  const KashiwaraQuotient line = kashiwara_quotient(testing::corpus("line_in_plane"), 1, 3);
  CHECK(line.supported_on_subvariety);
  CHECK(line.total_dimension > 0);
}
