#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spencerlab/builders.hpp"

namespace spencerlab {

/// Xi = sum w_i x_i d/dx_i; tangency to Y is verified (Xi(g) = deg(g) g).
Derivation euler_derivation(const AffineScene& scene);

/// Lie derivative and interior product of a vector field on differential
/// forms given as ambient elements over dx_S generators (as produced by
/// build_de_rham and build_jet_complex).
ModuleElement lie_derivative(const Derivation& xi, int form_degree, const ModuleElement& form);
ModuleElement interior_product(const Derivation& xi, int form_degree, const ModuleElement& form);

/// Matrices on graded pieces of a de Rham-type complex.  A vector field of
/// weight e maps the (i, d) piece to (i, d + e) resp. (i - 1, d + e).
Matrix lie_derivative_matrix(const GradedComplex& c, const Derivation& xi, int i, int d);
Matrix interior_product_matrix(const GradedComplex& c, const Derivation& xi, int i, int d);

struct CartanReport {
  bool holds = true;
  std::size_t pieces_checked = 0;
  std::vector<std::pair<int, int>> violations;  // (form degree, weight)
};

/// L = d iota + iota d, checked as matrices on every (i, d), d <= D.
CartanReport cartan_check(const GradedComplex& c, const Derivation& xi, int degree_bound);

struct CertifiedPiece {
  int form_degree = 0;
  int weight = 0;
  std::size_t dim = 0;
  bool lie_bijective = false;
  bool homotopy_identity = false;
  std::size_t homology = 0;  // independently computed
};

struct AcyclicityCertificate {
  std::string complex_name;
  std::string derivation;
  int degree_bound = 0;
  int min_form_degree = 1;
  int max_form_degree = 0;
  bool cartan = false;
  bool valid = false;
  std::vector<CertifiedPiece> pieces;
  /// First piece where L is singular or the homotopy fails, if any.
  std::optional<std::pair<int, int>> refused;
};

/// For every form degree i >= 1 and weight d <= D: L_Xi bijective on (i, d),
/// h = iota o L^{-1}, and d h + h d = id exactly; cross-checked against the
/// homology table.  The vector field must have weight 0.  Requesting form
/// degree 0 throws InputError (the homotopy only covers positive degrees).
AcyclicityCertificate acyclicity_certificate(const GradedComplex& c, const Derivation& xi, int degree_bound,
                                             int min_form_degree = 1);

struct PairingReport {
  std::size_t n = 0;
  std::size_t i = 0;
  int degree_bound = 0;
  bool bijective = true;
  std::vector<std::pair<int, std::size_t>> ranks;  // weight -> rank (nonzero pieces)
  std::vector<int> failures;
};

/// omega_X (x) wedge^i T -> Omega^{n-i}, vol (x) d_S |-> iota_{d_S} vol, on A^n
/// with unit weights, checked bijective on every weight piece <= D.
PairingReport contraction_pairing(std::size_t n, std::size_t i, int degree_bound);

}  // namespace spencerlab
