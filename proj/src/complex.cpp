#include "spencerlab/complex.hpp"

#include <algorithm>
#include <functional>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {
constexpr int kPieceDegreeLimit = 256;
}

std::string to_string(Direction d) { return d == Direction::Homological ? "homological" : "cohomological"; }

GradedComplex::GradedComplex(std::string name, Direction direction, std::vector<ComplexTerm> terms,
                             Differential differential)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->direction = direction;
  std::sort(terms.begin(), terms.end(), [](const ComplexTerm& a, const ComplexTerm& b) { return a.index < b.index; });
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (terms[k].index == terms[k - 1].index) throw InvariantViolation("complex has two terms at the same index");
  state_->terms = std::move(terms);
  state_->differential = std::move(differential);
}

const ComplexTerm* GradedComplex::term(int index) const {
  for (const auto& t : state_->terms)
    if (t.index == index) return &t;
  return nullptr;
}

std::vector<int> GradedComplex::indices() const {
  std::vector<int> out;
  for (const auto& t : state_->terms) out.push_back(t.index);
  return out;
}

int GradedComplex::min_weight() const {
  int w = 0;
  bool first = true;
  for (const auto& t : state_->terms) {
    if (t.module.generators().empty()) continue;
    const int m = t.module.min_generator_weight();
    w = first ? m : std::min(w, m);
    first = false;
  }
  return w;
}

ModuleElement GradedComplex::apply_differential(int index, const ModuleElement& e) const {
  ModuleElement out;
  if (!term(next_index(index))) return out;
  for (const auto& [key, c] : e.terms()) out += state_->differential(index, key.generator, key.monomial) * c;
  return out;
}

const GradedPiece& GradedComplex::piece(int index, int weight) const {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->pieces.find({index, weight});
    if (it != state_->pieces.end()) return *it->second;
  }
  auto computed = std::make_unique<GradedPiece>();
  if (const ComplexTerm* t = term(index)) {
    *computed = module_graded_piece(t->module, weight, kPieceDegreeLimit);
  } else {
    *computed = GradedPiece(weight, {}, {});
  }
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->pieces.try_emplace({index, weight}, std::move(computed));
  return *it->second;
}

const Matrix& GradedComplex::differential(int index, int weight) const {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->matrices.find({index, weight});
    if (it != state_->matrices.end()) return *it->second;
  }
  const GradedPiece& source = piece(index, weight);
  const GradedPiece& target = piece(next_index(index), weight);
  auto m = std::make_unique<Matrix>(target.dim(), source.dim());
  if (target.dim() > 0) {
    for (std::size_t k = 0; k < source.dim(); ++k) {
      Vector coords = target.coordinates(apply_differential(index, source.lift(k)));
      for (std::size_t r = 0; r < coords.size(); ++r) (*m)(r, k) = coords[r];
    }
  }
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->matrices.try_emplace({index, weight}, std::move(m));
  return *it->second;
}

GradedComplex GradedComplex::with_modules(std::string name,
                                          const std::function<PresentedModule(const ComplexTerm&)>& f) const {
  std::vector<ComplexTerm> terms;
  for (const auto& t : state_->terms) terms.push_back(ComplexTerm{t.index, f(t)});
  return GradedComplex(std::move(name), state_->direction, std::move(terms), state_->differential);
}

void HomologyTable::set(int index, int weight, std::size_t dim) {
  if (dim == 0) {
    entries_.erase({index, weight});
  } else {
    entries_[{index, weight}] = dim;
  }
}

std::size_t HomologyTable::at(int index, int weight) const {
  auto it = entries_.find({index, weight});
  return it == entries_.end() ? 0 : it->second;
}

std::map<int, std::map<int, std::size_t>> HomologyTable::by_index() const {
  std::map<int, std::map<int, std::size_t>> out;
  for (const auto& [key, dim] : entries_) out[key.first][key.second] = dim;
  return out;
}

void check_d_squared(const GradedComplex& c, int degree_bound) {
  for (int w = c.min_weight(); w <= degree_bound; ++w) {
    for (int i : c.indices()) {
      const int j = c.next_index(i);
      if (!c.term(j) || !c.term(c.next_index(j))) continue;
      const Matrix& first = c.differential(i, w);
      const Matrix& second = c.differential(j, w);
      if (first.empty() || second.empty()) continue;
      if (!(second * first).is_zero())
        throw InvariantViolation("d*d != 0 in complex '" + c.name() + "' at index " + std::to_string(i) +
                                 ", weight " + std::to_string(w));
    }
  }
}

std::size_t homology_dimension(const GradedComplex& c, int index, int weight) {
  const std::size_t dim = c.dim(index, weight);
  if (dim == 0) return 0;
  const std::size_t outgoing = c.term(c.next_index(index)) ? rank(c.differential(index, weight)) : 0;
  const int prev = c.previous_index(index);
  const std::size_t incoming = c.term(prev) ? rank(c.differential(prev, weight)) : 0;
  if (outgoing + incoming > dim) throw InvariantViolation("homology rank exceeds component dimension");
  return dim - outgoing - incoming;
}

HomologyTable homology_table(const GradedComplex& c, int degree_bound) {
  check_d_squared(c, degree_bound);
  HomologyTable table(c.min_weight(), degree_bound);
  for (int w = c.min_weight(); w <= degree_bound; ++w) {
    long long chi_components = 0;
    long long chi_homology = 0;
    for (int i : c.indices()) {
      const long long sign = (i % 2 == 0) ? 1 : -1;
      const std::size_t h = homology_dimension(c, i, w);
      chi_components += sign * static_cast<long long>(c.dim(i, w));
      chi_homology += sign * static_cast<long long>(h);
      table.set(i, w, h);
    }
    if (chi_components != chi_homology)
      throw InvariantViolation("Euler characteristic not conserved in '" + c.name() + "' at weight " + std::to_string(w));
  }
  return table;
}

HomologyTable component_table(const GradedComplex& c, int degree_bound) {
  HomologyTable table(c.min_weight(), degree_bound);
  for (int w = c.min_weight(); w <= degree_bound; ++w)
    for (int i : c.indices()) table.set(i, w, c.dim(i, w));
  return table;
}

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t k) {
  if (k > n) return;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (current.size() == k) {
      lookup_.emplace(current, subsets_.size());
      subsets_.push_back(current);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      current.push_back(j);
      walk(j + 1);
      current.pop_back();
    }
  };
  walk(0);
}

std::pair<std::vector<std::size_t>, int> wedge_left(std::size_t j, const std::vector<std::size_t>& subset) {
  if (std::find(subset.begin(), subset.end(), j) != subset.end()) return {{}, 0};
  std::vector<std::size_t> out;
  std::size_t smaller = 0;
  for (auto s : subset)
    if (s < j) ++smaller;
  out = subset;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(smaller), j);
  return {out, smaller % 2 == 0 ? 1 : -1};
}

}  // namespace spencerlab
