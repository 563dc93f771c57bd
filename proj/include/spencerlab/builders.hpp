#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spencerlab/complex.hpp"

namespace spencerlab {

/// Koszul complex over O_Y of a sequence of weighted-homogeneous elements.
/// Term k is the free module on e_S, |S| = k, with e_S of weight sum deg f_s;
/// d(e_S) = sum_t (-1)^t f_{s_t} e_{S - s_t}.  Homological, index k.
GradedComplex build_koszul(const AffineScene& scene, const std::vector<Polynomial>& elements);

/// Koszul complex M (x) wedge(e_1..e_k) of a presented module.  Generator
/// (g, S) has index g * C(k, |S|) + position of S.  With cohomological
/// indexing the term wedge^k sits at index -k and d raises the index.
GradedComplex build_koszul(const PresentedModule& m, const std::vector<Polynomial>& elements,
                           bool cohomological_indexing = false);

/// Kaehler differentials of O_Y: Omega^i_X modulo I*Omega^i and dI ^ Omega^{i-1}.
PresentedModule kahler_forms(const AffineScene& scene, int degree);

/// Algebraic de Rham complex of Y (cohomological, index = form degree).
GradedComplex build_de_rham(const AffineScene& scene);

/// r-th infinitesimal neighbourhood of the diagonal in Y x Y: the scene on
/// doubled variables (x, x_2) with ideal I(x) + I(x_2) + (x - x_2)^{r+1}.
/// Its ring of functions is the jet module J^r(O_Y) = (O_Y (x) O_Y) / Delta^{r+1}.
AffineScene thickened_diagonal(const AffineScene& scene, int r);

/// Jet complex of order r in {0, 1, 2}: the de Rham complex of the r-th
/// infinitesimal neighbourhood of the diagonal.  Degree 0 is J^r(O_Y); r = 0
/// recovers the de Rham complex of Y.
GradedComplex build_jet_complex(const AffineScene& scene, int r);

/// A module on affine space with an action of the coordinate vector fields.
struct DModule {
  std::string kind;
  PresentedModule module;
  /// d/dx_j applied to monomial * generator.
  std::function<ModuleElement(std::size_t j, int generator, const Monomial& m)> act;
};

/// O_X with the tautological action (differentiation).
DModule structure_sheaf_module(const AffineScene& scene);
/// Omega^k_X with the Lie-derivative action of the coordinate fields.
DModule differential_forms_module(const AffineScene& scene, int degree);
/// "O", "omega1", "omega-top" or "omega<k>".
DModule dmodule_by_name(const AffineScene& scene, const std::string& name);

/// Spencer complex M (x) wedge^i T  ->  M (x) wedge^{i-1} T with the two-sum
/// differential (action terms and bracket terms).  Requires Y = affine space.
/// Indexed by j = n - i (cohomological) and weighted by the canonical twist
/// wt(m (x) d_S) = wt(m) + sum(w) - w_S, so that the complex is identified with
/// Omega^j (x) M by contraction with the volume form.
GradedComplex build_spencer_of_module(const DModule& m, const AffineScene& scene);

}  // namespace spencerlab
