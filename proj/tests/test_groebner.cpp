#include <doctest.h>

#include <set>

#include "spencerlab/errors.hpp"
#include "spencerlab/groebner.hpp"
#include "support.hpp"

using namespace spencerlab;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Staircase count straight from the leading monomials: every monomial in the
// box that no leading monomial divides (box large enough for these ideals).
std::size_t staircase(const GroebnerBasis& gb, int box) {
  const std::size_t n = gb.order().ring()->nvars();
  std::size_t count = 0;
  std::vector<int> e(n, 0);
  while (true) {
    const Monomial m(e);
    bool standard = true;
    for (const auto& lm : gb.leading_monomials()) standard = standard && !lm.divides(m);
    count += standard;
    std::size_t k = 0;
    while (k < n && ++e[k] > box) e[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("reduced Groebner bases of small ideals") {
  RingPtr ring = make_ring({"x", "y"}, {1, 1});
  auto gb = [&](std::vector<std::string> gens, OrderKind kind = OrderKind::WeightedDegRevLex) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
    return buchberger(Ideal(ring, ps), MonomialOrder(ring, kind));
  };
  CHECK(strings(gb({"x^2 + y^2 - 1", "x - y"}, OrderKind::Lex).generators()) ==
        std::vector<std::string>{"x - y", "y^2 - 1/2"});
  CHECK(gb({"x", "x + 1"}).is_unit());
  CHECK(strings(gb({"x*y", "x^2"}).generators()) == std::vector<std::string>{"x*y", "x^2"});
  // cusp singular-locus ideal (f, f_x, f_y)
  RingPtr wr = make_ring({"x", "y"}, {2, 3});
  const GroebnerBasis sing = buchberger(
      Ideal(wr, {parse_polynomial("x^3 - y^2", wr), parse_polynomial("3*x^2", wr), parse_polynomial("-2*y", wr)}));
  CHECK(strings(sing.generators()) == std::vector<std::string>{"x^2", "y"});
}

TEST_CASE("normal forms and membership") {
  RingPtr ring = make_ring({"x", "y"}, {2, 3});
  const Polynomial f = parse_polynomial("x^3 - y^2", ring);
  const GroebnerBasis gb = buchberger(Ideal(ring, {f}));
  CHECK(ideal_contains(gb, f * parse_polynomial("x*y + 7", ring)));
  CHECK_FALSE(ideal_contains(gb, parse_polynomial("x^3", ring)));
  CHECK(normal_form(parse_polynomial("x^3 + y", ring), gb) == normal_form(parse_polynomial("y^2 + y", ring), gb));
}

TEST_CASE("S-pair budget") {
  RingPtr ring = make_ring({"x", "y", "z"}, {1, 1, 1});
  const Ideal ideal(ring, {parse_polynomial("x^2 - y*z", ring), parse_polynomial("y^2 - x*z", ring),
                           parse_polynomial("z^2 - x*y", ring)});
  CHECK_THROWS_AS(buchberger(ideal, MonomialOrder(ring), 1), BudgetExceeded);
  CHECK_NOTHROW(buchberger(ideal, MonomialOrder(ring), 1000));
}

TEST_CASE("quotient dimensions agree with an independent staircase count") {
  struct Case {
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::string> gens;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {{"x", "y"}, {2, 3}, {"3*x^2", "-2*y"}, 2},
      {{"x", "y"}, {4, 3}, {"3*x^2", "4*y^3"}, 6},
      {{"x", "y"}, {1, 1}, {"2*x", "-2*y"}, 1},
      {{"x", "y"}, {1, 1}, {"x^2 + y^2", "x*y"}, 4},
      {{"x", "y", "z"}, {1, 1, 1}, {"x^2", "y^2", "z^2"}, 8},
  };
  for (const auto& c : cases) {
    RingPtr ring = make_ring(c.vars, c.weights);
    std::vector<Polynomial> ps;
    for (const auto& g : c.gens) ps.push_back(parse_polynomial(g, ring));
    const GroebnerBasis gb = buchberger(Ideal(ring, ps));
    const QuotientDimension q = quotient_dimension(gb);
    REQUIRE(q.finite());
    CHECK(*q.dimension == c.dim);
    CHECK(staircase(gb, 8) == c.dim);
    CHECK(q.basis.size() == c.dim);
  }
  RingPtr ring = make_ring({"x", "y"}, {1, 1});
  CHECK_FALSE(quotient_dimension(Ideal(ring, {parse_polynomial("x", ring)})).finite());
}

TEST_CASE("lex and degrevlex agree on the quotient dimension") {
  RingPtr ring = make_ring({"x", "y"}, {1, 1});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Ideal ideal(ring, {parse_polynomial("x^3 - y", ring) * Polynomial(ring, Rational(trial + 1)),
                             parse_polynomial("y^2", ring) + testing::random_polynomial(ring, rng, 1, 2) *
                                                                 parse_polynomial("x^4", ring)});
    const auto a = quotient_dimension(ideal, OrderKind::WeightedDegRevLex);
    const auto b = quotient_dimension(ideal, OrderKind::Lex);
    CHECK(a.dimension == b.dimension);
  }
}
