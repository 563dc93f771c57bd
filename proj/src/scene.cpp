#include "spencerlab/scene.hpp"

#include <algorithm>
#include <map>

#include "spencerlab/errors.hpp"

namespace spencerlab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_ && !(*g.ring() == *ring_)) throw InputError("ideal generators belong to different rings");
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::power(int r) const {
  if (r < 0) throw InputError("ideal power must be non-negative");
  if (r == 0) return Ideal(ring_, {Polynomial(ring_, Rational(1))});
  // Multisets of size r over the generators.
  std::vector<Polynomial> out;
  std::vector<std::size_t> choice(r, 0);
  const std::size_t n = generators_.size();
  if (n == 0) return Ideal(ring_, {});
  while (true) {
    Polynomial prod(ring_, Rational(1));
    for (auto c : choice) prod = prod * generators_[c];
    out.push_back(std::move(prod));
    int k = r - 1;
    while (k >= 0 && choice[k] == n - 1) --k;
    if (k < 0) break;
    ++choice[k];
    for (int j = k + 1; j < r; ++j) choice[j] = choice[k];
  }
  return Ideal(ring_, std::move(out));
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_ ? ring_ : other.ring_, std::move(gens));
}

bool Ideal::is_weighted_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return spencerlab::is_weighted_homogeneous(g); });
}

int Ideal::min_generator_weight() const {
  if (generators_.empty()) throw InputError("empty ideal has no generator weight");
  int best = *weighted_degree(generators_.front());
  for (const auto& g : generators_) best = std::min(best, *weighted_degree(g));
  return best;
}

AffineScene::AffineScene(RingPtr ring, Ideal ideal, std::string name)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), name_(std::move(name)) {
  if (!ideal_.ring()) ideal_ = Ideal(ring_, {});
  for (const auto& g : ideal_.generators()) {
    if (!weighted_degree(g))
      throw InputError("ideal generator '" + g.to_string() + "' is not weighted-homogeneous for the ring weights");
  }
}

AffineScene::AffineScene(RingPtr ring, std::string name) : AffineScene(ring, Ideal(ring, {}), std::move(name)) {}

SubspaceReducer ideal_slice(const Ideal& ideal, int d) {
  const auto& ring = *ideal.ring();
  const auto& monomials = ring.monomials_of_weight(d);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);

  std::vector<Vector> rows;
  for (const auto& g : ideal.generators()) {
    const int dg = *weighted_degree(g);
    if (dg > d) continue;
    for (const auto& m : ring.monomials_of_weight(d - dg)) {
      Vector row(monomials.size());
      for (const auto& [t, c] : g.terms()) row[column.at(t * m)] = c;
      rows.push_back(std::move(row));
    }
  }
  return SubspaceReducer(Matrix::from_rows(rows, monomials.size()));
}

bool ideal_contains_degreewise(const Ideal& ideal, const Polynomial& p) {
  if (p.is_zero()) return true;
  auto d = weighted_degree(p);
  if (!d) throw InputError("degreewise membership needs a weighted-homogeneous polynomial");
  if (ideal.empty()) return false;
  const auto& monomials = ideal.ring()->monomials_of_weight(*d);
  Vector v(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) v[i] = p.coefficient(monomials[i]);
  return ideal_slice(ideal, *d).contains(v);
}

std::vector<Monomial> graded_component_basis(const AffineScene& scene, int d) {
  if (d < 0) return {};
  const auto& monomials = scene.ring()->monomials_of_weight(d);
  SubspaceReducer slice = ideal_slice(scene.ideal(), d);
  std::vector<Monomial> basis;
  for (auto c : slice.free_columns()) basis.push_back(monomials[c]);
  return basis;
}

std::size_t graded_component_dimension(const AffineScene& scene, int d) {
  if (d < 0) return 0;
  return ideal_slice(scene.ideal(), d).quotient_dim();
}

}  // namespace spencerlab
