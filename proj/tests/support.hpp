#pragma once

#include <random>
#include <string>

#include "spencerlab/scene_file.hpp"

namespace testing {

using namespace spencerlab;

inline AffineScene corpus(const std::string& name) {
  return load_scene(std::string(SPENCERLAB_SCENES) + "/" + name + ".scene");
}

inline AffineScene scene(std::vector<std::string> vars, std::vector<int> weights, std::vector<std::string> ideal = {},
                         std::string name = "") {
  RingPtr ring = make_ring(std::move(vars), std::move(weights));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal) gens.push_back(parse_polynomial(g, ring));
  return AffineScene(ring, Ideal(ring, gens), std::move(name));
}

// small coefficients, few terms, low degree: enough to hit cancellations
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng, int max_exp = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, max_exp), terms(0, max_terms);
  Polynomial p(ring);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t j = 0; j < ring->nvars(); ++j) m[j] = exp(rng);
    p.add_term(m, Rational(coeff(rng)) / (1 + k % 3));
  }
  return p;
}

}  // namespace testing
