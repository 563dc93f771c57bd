#include "spencerlab/invariants.hpp"

#include <algorithm>
#include <functional>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {

// Determinant by cofactor expansion; c <= 6 at desk scale.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(ring, Rational(1));
  if (n == 1) return m[0][0];
  Polynomial out(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * determinant(minor, ring);
    out = c % 2 == 0 ? out + term : out - term;
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      cur.push_back(j);
      walk(j + 1);
      cur.pop_back();
    }
  };
  walk(0);
}

std::map<int, std::size_t> quotient_dims(const AffineScene& scene, const std::vector<Polynomial>& extra, int low,
                                         int high) {
  std::vector<Polynomial> gens = scene.ideal().generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  const AffineScene quotient(scene.ring(), Ideal(scene.ring(), gens), scene.name());
  std::map<int, std::size_t> out;
  for (int d = low; d <= high; ++d) {
    const std::size_t dim = graded_component_dimension(quotient, d);
    if (dim > 0) out[d] = dim;
  }
  return out;
}

}  // namespace

SmoothnessReport jacobian_smoothness(const AffineScene& scene) {
  SmoothnessReport report;
  const auto& gens = scene.ideal().generators();
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();
  const std::size_t c = gens.size();
  report.codimension = c;
  if (c == 0) return report;
  if (c > n) throw InputError("Jacobian criterion needs a complete-intersection presentation (" + std::to_string(c) +
                              " generators in " + std::to_string(n) + " variables)");

  std::vector<std::vector<Polynomial>> jac(c);
  for (std::size_t r = 0; r < c; ++r)
    for (std::size_t j = 0; j < n; ++j) jac[r].push_back(partial_derivative(gens[r], j));

  std::vector<Polynomial> locus = gens;
  for_each_subset(n, c, [&](const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Polynomial>> sub(c);
    for (std::size_t r = 0; r < c; ++r)
      for (auto j : cols) sub[r].push_back(jac[r][j]);
    Polynomial minor = determinant(sub, ring);
    if (!minor.is_zero()) locus.push_back(std::move(minor));
  });
  const GroebnerBasis gb = buchberger(Ideal(ring, locus));
  report.smooth = gb.is_unit();
  if (!report.smooth) report.singular_locus = gb.generators();
  return report;
}

MilnorTjurina milnor_tjurina(const Polynomial& f) {
  if (f.is_zero()) throw InputError("Milnor number of the zero polynomial is undefined");
  const auto ring = f.ring();
  std::vector<Polynomial> jac;
  for (std::size_t j = 0; j < ring->nvars(); ++j) jac.push_back(partial_derivative(f, j));
  MilnorTjurina out;
  out.weighted_homogeneous = is_weighted_homogeneous(f);

  const QuotientDimension mu = quotient_dimension(Ideal(ring, jac));
  std::vector<Polynomial> with_f = jac;
  with_f.insert(with_f.begin(), f);
  const QuotientDimension tau = quotient_dimension(Ideal(ring, with_f));
  out.mu = mu.dimension;
  out.tau = tau.dimension;
  if (mu.finite()) out.mu_basis = mu.basis;
  if (tau.finite()) out.tau_basis = tau.basis;
  // Euler relation: f = sum (w_j / deg f) x_j df/dx_j lies in the Jacobian ideal
  if (out.weighted_homogeneous && out.mu != out.tau)
    throw InvariantViolation("mu != tau for weighted-homogeneous " + f.to_string());
  return out;
}

SpencerH0 spencer_h0(const AffineScene& scene, int degree_bound) {
  SpencerH0 out;
  out.degree_bound = degree_bound;
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();
  for (int e = -ring->max_weight(); e <= degree_bound; ++e) {
    const DerivationPiece piece = derivation_module_piece(scene, e, std::max(64, degree_bound + ring->max_weight()));
    for (const auto& xi : piece.basis)
      for (std::size_t j = 0; j < n; ++j)
        if (!xi.coefficient(j).is_zero()) out.alpha_generators.push_back(xi.coefficient(j));
  }
  // report alpha by its reduced Groebner basis, not the raw (redundant) value list
  if (!out.alpha_generators.empty()) out.alpha_generators = buchberger(Ideal(ring, out.alpha_generators)).generators();
  out.quotient = quotient_dims(scene, out.alpha_generators, 0, degree_bound);
  if (scene.ideal().size() == 1) {
    std::vector<Polynomial> jac;
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial p = partial_derivative(scene.ideal().generators()[0], j);
      if (!p.is_zero()) jac.push_back(std::move(p));
    }
    out.jacobian = quotient_dims(scene, jac, 0, degree_bound);
    out.matches_jacobian = *out.jacobian == out.quotient;
  }
  return out;
}

}  // namespace spencerlab
