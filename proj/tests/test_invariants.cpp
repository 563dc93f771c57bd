#include <doctest.h>

#include "spencerlab/errors.hpp"
#include "spencerlab/invariants.hpp"
#include "support.hpp"

using namespace spencerlab;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& basis, const RingPtr& ring) {
  std::vector<std::string> out;
  for (const auto& m : basis) out.push_back(ring->monomial_to_string(m));
  return out;
}

}  // namespace

TEST_CASE("Milnor and Tjurina numbers") {
  struct Case {
    const char* scene;
    std::size_t mu;
    std::vector<std::string> basis;
  };
  const std::vector<Case> cases = {
      {"cusp", 2, {"1", "x"}},
      {"e6", 6, {"1", "y", "x", "y^2", "x*y", "x*y^2"}},
      {"node", 1, {"1"}},
      {"e8", 8, {}},
      {"quartic", 9, {}},
  };
  for (const auto& c : cases) {
    const AffineScene s = testing::corpus(c.scene);
    const MilnorTjurina mt = milnor_tjurina(s.ideal().generators()[0]);
    CHECK(mt.weighted_homogeneous);
    CHECK(mt.mu == c.mu);
    CHECK(mt.tau == c.mu);
    CHECK(mt.mu_basis.size() == c.mu);
    if (!c.basis.empty()) CHECK(names(mt.mu_basis, s.ring()) == c.basis);
  }
}

TEST_CASE("non-isolated and non-quasi-homogeneous singularities") {
  const AffineScene a2 = testing::corpus("a2");
  const MilnorTjurina dbl = milnor_tjurina(a2.parse("x^2"));
  CHECK_FALSE(dbl.mu.has_value());
  // x^5 + y^5 + x^2 y^2 is not quasi-homogeneous.  The counts are global:
  // mu = 16 (Bezout; the origin contributes 11, four more critical points 5),
  // tau = 10 (only the origin lies on f = 0, since 5f = x^2 y^2 at critical points)
  const MilnorTjurina t = milnor_tjurina(a2.parse("x^5 + y^5 + x^2*y^2"));
  CHECK_FALSE(t.weighted_homogeneous);
  CHECK(t.mu == 16u);
  CHECK(t.tau == 10u);
  CHECK_THROWS_AS(milnor_tjurina(Polynomial(a2.ring())), InputError);
}

TEST_CASE("Jacobian criterion") {
  CHECK(jacobian_smoothness(testing::corpus("a2")).smooth);
  CHECK(jacobian_smoothness(testing::corpus("line_in_plane")).smooth);
  CHECK(jacobian_smoothness(testing::corpus("origin_a1")).smooth);
  const SmoothnessReport cusp = jacobian_smoothness(testing::corpus("cusp"));
  CHECK_FALSE(cusp.smooth);
  REQUIRE(cusp.singular_locus.size() == 2);
  CHECK_FALSE(jacobian_smoothness(testing::corpus("cusp3")).smooth);
  CHECK_FALSE(jacobian_smoothness(testing::corpus("quadric_cone")).smooth);
  CHECK_FALSE(jacobian_smoothness(testing::corpus("fat_point")).smooth);
  CHECK_THROWS_AS(jacobian_smoothness(testing::scene({"x"}, {1}, {"x", "x^2"})), InputError);
}

TEST_CASE("Spencer H0") {
  for (const char* smooth : {"a1", "a2", "line_in_plane"}) CHECK(spencer_h0(testing::corpus(smooth), 6).quotient.empty());
  const SpencerH0 cusp = spencer_h0(testing::corpus("cusp"), 8);
  CHECK(cusp.quotient == std::map<int, std::size_t>{{0, 1}});
  REQUIRE(cusp.jacobian.has_value());
  CHECK(*cusp.jacobian == std::map<int, std::size_t>{{0, 1}, {2, 1}});
  CHECK(cusp.matches_jacobian == false);
  const SpencerH0 node = spencer_h0(testing::corpus("node"), 6);
  CHECK(node.matches_jacobian == true);
}
