#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spencerlab/groebner.hpp"
#include "spencerlab/module.hpp"

namespace spencerlab {

struct SmoothnessReport {
  bool smooth = true;
  std::size_t codimension = 0;
  /// Reduced Groebner basis of the ideal + maximal Jacobian minors when singular.
  std::vector<Polynomial> singular_locus;
};

/// Jacobian criterion for a complete-intersection presentation: smooth iff
/// (generators, c x c minors of the Jacobian) is the unit ideal.
SmoothnessReport jacobian_smoothness(const AffineScene& scene);

struct MilnorTjurina {
  std::optional<std::size_t> mu;   // nullopt: infinite
  std::optional<std::size_t> tau;  // nullopt: infinite
  std::vector<Monomial> mu_basis;
  std::vector<Monomial> tau_basis;
  bool weighted_homogeneous = false;
};

/// mu = dim O/(df), tau = dim O/(f, df).  For weighted-homogeneous f with an
/// isolated singularity mu == tau is asserted (InvariantViolation otherwise).
MilnorTjurina milnor_tjurina(const Polynomial& f);

struct SpencerH0 {
  int degree_bound = 0;
  std::vector<Polynomial> alpha_generators;     // xi(x_j) over derivation representatives
  std::map<int, std::size_t> quotient;          // weight -> dim (O_Y / alpha)_d, nonzero only
  std::optional<std::map<int, std::size_t>> jacobian;  // hypersurfaces: dim (O_Y / (df))_d
  std::optional<bool> matches_jacobian;
};

/// Degreewise O_Y / alpha(T_Y), alpha generated by the values of derivation
/// representatives of weight <= D on the coordinates.
SpencerH0 spencer_h0(const AffineScene& scene, int degree_bound);

}  // namespace spencerlab
