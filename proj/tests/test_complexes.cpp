#include <doctest.h>

#include "spencerlab/builders.hpp"
#include "spencerlab/errors.hpp"
#include "support.hpp"

using namespace spencerlab;

namespace {

using Table = std::map<std::pair<int, int>, std::size_t>;

// sum_i (-1)^i dim C_i == sum_i (-1)^i dim H_i at one weight
void check_euler_characteristic(const GradedComplex& c, int degree_bound) {
  for (int d = c.min_weight(); d <= degree_bound; ++d) {
    long chain = 0, homology = 0;
    for (int i : c.indices()) {
      const long sign = i % 2 == 0 ? 1 : -1;
      chain += sign * static_cast<long>(c.dim(i, d));
      homology += sign * static_cast<long>(homology_dimension(c, i, d));
    }
    CHECK(chain == homology);
  }
}

}  // namespace

TEST_CASE("Koszul complex of the coordinates is a resolution of the residue field") {
  for (const char* name : {"a1", "a2", "a3", "a2_weighted"}) {
    const AffineScene s = testing::corpus(name);
    std::vector<Polynomial> vars;
    for (std::size_t j = 0; j < s.nvars(); ++j) vars.push_back(Polynomial::variable(s.ring(), j));
    const GradedComplex k = build_koszul(s, vars);
    check_d_squared(k, 8);
    CHECK(homology_table(k, 8).entries() == Table{{{0, 0}, 1}});
    check_euler_characteristic(k, 8);
  }
}

TEST_CASE("Koszul complex of a non-regular sequence has higher homology") {
  const AffineScene a2 = testing::corpus("a2");
  const GradedComplex k = build_koszul(a2, {a2.parse("x"), a2.parse("x")});
  check_d_squared(k, 4);
  CHECK(homology_dimension(k, 1, 1) == 1);
  // (x*y, x^2): H_1 generated in weight 3
  const GradedComplex k2 = build_koszul(a2, {a2.parse("x*y"), a2.parse("x^2")});
  CHECK(homology_dimension(k2, 1, 3) == 1);
  check_euler_characteristic(k2, 6);
}

TEST_CASE("Koszul complex of a regular sequence on a quotient") {
  // on the cusp, x is a nonzerodivisor: H_0 = O/(x^3 - y^2, x), one class each at 0 and 3
  const AffineScene cusp = testing::corpus("cusp");
  const GradedComplex k = build_koszul(cusp, {cusp.parse("x")});
  CHECK(homology_table(k, 10).entries() == Table{{{0, 0}, 1}, {{0, 3}, 1}});
}

TEST_CASE("de Rham complex of affine space") {
  for (const char* name : {"a1", "a2", "a3", "a2_weighted"}) {
    const GradedComplex dr = build_de_rham(testing::corpus(name));
    check_d_squared(dr, 6);
    CHECK(homology_table(dr, 6).entries() == Table{{{0, 0}, 1}});
    check_euler_characteristic(dr, 6);
  }
}

TEST_CASE("de Rham complex of quasi-homogeneous curves") {
  const GradedComplex dr = build_de_rham(testing::corpus("cusp"));
  check_d_squared(dr, 10);
  CHECK(dr.dim(1, 2) == 1);  // dx
  CHECK(dr.dim(2, 5) == 1);  // dx^dy is torsion but nonzero
  CHECK(homology_table(dr, 10).entries() == Table{{{0, 0}, 1}});
  check_euler_characteristic(dr, 10);
  // two lines: still contractible by the Euler field
  CHECK(homology_table(build_de_rham(testing::corpus("axes")), 6).entries() == Table{{{0, 0}, 1}});
}

TEST_CASE("de Rham of a non-reduced point sees the nilpotent") {
  // O = Q[x]/(x^2): d(x) = dx is nonzero, dx * x = 0 in Omega^1 modulo d(x^2) = 2x dx
  const GradedComplex dr = build_de_rham(testing::corpus("fat_point"));
  check_d_squared(dr, 4);
  CHECK(dr.dim(0, 1) == 1);
  CHECK(dr.dim(1, 1) == 1);
  CHECK(homology_table(dr, 4).entries() == Table{{{0, 0}, 1}});
}

TEST_CASE("Kahler forms") {
  const AffineScene cusp = testing::corpus("cusp");
  const PresentedModule om1 = kahler_forms(cusp, 1);
  // weight 5: x dy, y dx modulo nothing (relation 3x^2 dx - 2y dy starts at weight 6)
  CHECK(module_graded_piece(om1, 5).dim() == 2);
  CHECK(module_graded_piece(om1, 6).dim() == 1);  // x^2 dx, y dy with one relation
}

TEST_CASE("jet complexes") {
  const AffineScene a1 = testing::corpus("a1");
  const GradedComplex j0 = build_jet_complex(a1, 0);
  const GradedComplex dr = build_de_rham(a1);
  for (int d = 0; d <= 5; ++d) {
    CHECK(j0.dim(0, d) == dr.dim(0, d));
    CHECK(j0.dim(1, d) == dr.dim(1, d));
  }
  const GradedComplex j1 = build_jet_complex(a1, 1);
  CHECK(j1.dim(0, 0) == 1);
  for (int d = 1; d <= 6; ++d) CHECK(j1.dim(0, d) == 2);
  for (const char* name : {"a2", "cusp", "node"}) {
    const GradedComplex j = build_jet_complex(testing::corpus(name), 1);
    check_d_squared(j, 6);
    CHECK(homology_table(j, 6).entries() == Table{{{0, 0}, 1}});
    check_euler_characteristic(j, 6);
  }
  CHECK_THROWS_AS(build_jet_complex(a1, -1), InputError);
}

TEST_CASE("Spencer complex of D-modules on affine space") {
  const AffineScene a1 = testing::corpus("a1");
  const AffineScene a2 = testing::corpus("a2");
  const GradedComplex o1 = build_spencer_of_module(structure_sheaf_module(a1), a1);
  check_d_squared(o1, 6);
  CHECK(homology_table(o1, 6).entries() == Table{{{0, 0}, 1}});
  const GradedComplex o2 = build_spencer_of_module(dmodule_by_name(a2, "O"), a2);
  check_d_squared(o2, 6);
  CHECK(homology_table(o2, 6).entries() == Table{{{0, 0}, 1}});
  const GradedComplex w1 = build_spencer_of_module(dmodule_by_name(a1, "omega1"), a1);
  check_d_squared(w1, 6);
  CHECK(homology_table(w1, 6).entries() == Table{{{0, 1}, 1}});
  for (const char* m : {"omega1", "omega-top"}) {
    const GradedComplex c = build_spencer_of_module(dmodule_by_name(a2, m), a2);
    check_d_squared(c, 5);
    check_euler_characteristic(c, 5);
  }
  CHECK_THROWS_AS(build_spencer_of_module(structure_sheaf_module(a1), testing::corpus("cusp")), InputError);
  CHECK_THROWS_AS(dmodule_by_name(a1, "jets"), InputError);
}

TEST_CASE("homology dimension is rank-nullity of adjacent differentials") {
  const GradedComplex dr = build_de_rham(testing::corpus("e6"));
  for (int d = 0; d <= 12; ++d)
    for (int i : dr.indices()) {
      const std::size_t dim = dr.dim(i, d);
      const std::size_t out = dim == 0 ? 0 : rank(dr.differential(i, d));
      const int prev = dr.previous_index(i);
      const std::size_t in = dr.term(prev) && dr.dim(prev, d) > 0 ? rank(dr.differential(prev, d)) : 0;
      CHECK(homology_dimension(dr, i, d) == dim - out - in);
    }
}
