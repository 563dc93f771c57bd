#include "spencerlab/module.hpp"

#include <algorithm>

#include "spencerlab/errors.hpp"
#include "spencerlab/groebner.hpp"

namespace spencerlab {

ModuleElement ModuleElement::basis(int generator, const Monomial& m, const Rational& c) {
  ModuleElement e;
  e.add(generator, m, c);
  return e;
}

void ModuleElement::add(int generator, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(BasisKey{generator, m}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void ModuleElement::add(int generator, const Polynomial& coeff, const Rational& scale) {
  for (const auto& [m, c] : coeff.terms()) add(generator, m, c * scale);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  for (const auto& [k, c] : other.terms_) add(k.generator, k.monomial, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  for (const auto& [k, c] : other.terms_) add(k.generator, k.monomial, -c);
  return *this;
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  ModuleElement out = *this;
  out += other;
  return out;
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const {
  ModuleElement out = *this;
  out -= other;
  return out;
}

ModuleElement ModuleElement::operator*(const Rational& c) const {
  ModuleElement out;
  if (sgn(c) == 0) return out;
  for (const auto& [k, a] : terms_) out.terms_.emplace(k, a * c);
  return out;
}

ModuleElement ModuleElement::times_monomial(const Monomial& m, const Rational& c) const {
  ModuleElement out;
  if (sgn(c) == 0) return out;
  for (const auto& [k, a] : terms_) out.terms_.emplace(BasisKey{k.generator, k.monomial * m}, a * c);
  return out;
}

ModuleElement ModuleElement::times(const Polynomial& p) const {
  ModuleElement out;
  for (const auto& [m, c] : p.terms()) out += times_monomial(m, c);
  return out;
}

Polynomial ModuleElement::component(int generator, const RingPtr& ring) const {
  Polynomial p(ring);
  for (const auto& [k, c] : terms_)
    if (k.generator == generator) p.add_term(k.monomial, c);
  return p;
}

PresentedModule::PresentedModule(AffineScene scene, std::vector<ModuleGenerator> generators,
                                 std::vector<ModuleElement> relations)
    : scene_(std::move(scene)), generators_(std::move(generators)) {
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    for (const auto& [k, c] : r.terms())
      if (k.generator < 0 || static_cast<std::size_t>(k.generator) >= generators_.size())
        throw InputError("module relation refers to an unknown generator");
    if (!element_weight(r)) throw InputError("module relation is not weighted-homogeneous");
    relations_.push_back(std::move(r));
  }
}

int PresentedModule::min_generator_weight() const {
  if (generators_.empty()) return 0;
  int w = generators_.front().weight;
  for (const auto& g : generators_) w = std::min(w, g.weight);
  return w;
}

std::optional<int> PresentedModule::element_weight(const ModuleElement& e) const {
  std::optional<int> w;
  for (const auto& [k, c] : e.terms()) {
    const int wk = ring()->weighted_degree(k.monomial) + generators_.at(k.generator).weight;
    if (w && *w != wk) return std::nullopt;
    w = wk;
  }
  return w;
}

PresentedModule PresentedModule::with_relations(std::vector<ModuleElement> extra) const {
  std::vector<ModuleElement> all = relations_;
  all.insert(all.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  PresentedModule out(scene_, generators_, std::move(all));
  out.slice_relations_ = slice_relations_;
  return out;
}

PresentedModule PresentedModule::with_slice_relations(SliceRelations extra) const {
  PresentedModule out = *this;
  out.slice_relations_.push_back(std::move(extra));
  return out;
}

PresentedModule PresentedModule::modulo_ideal(const Ideal& ideal) const {
  std::vector<ModuleElement> extra;
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      ModuleElement e;
      e.add(static_cast<int>(k), g);
      extra.push_back(std::move(e));
    }
  return with_relations(std::move(extra));
}

std::string PresentedModule::element_label(const BasisKey& key) const {
  const std::string& gen = generators_.at(key.generator).label;
  if (key.monomial.is_one()) return gen.empty() ? "1" : gen;
  std::string mon = ring()->monomial_to_string(key.monomial);
  return gen.empty() || gen == "1" ? mon : mon + "*" + gen;
}

GradedPiece::GradedPiece(int weight, std::vector<BasisKey> ambient, const std::vector<Vector>& relation_rows)
    : weight_(weight), ambient_(std::move(ambient)) {
  for (std::size_t i = 0; i < ambient_.size(); ++i) column_.emplace(ambient_[i], i);
  reducer_ = SubspaceReducer(Matrix::from_rows(relation_rows, ambient_.size()));
}

std::vector<BasisKey> GradedPiece::basis() const {
  std::vector<BasisKey> out;
  for (auto c : reducer_.free_columns()) out.push_back(ambient_[c]);
  return out;
}

Vector GradedPiece::ambient_vector(const ModuleElement& e) const {
  Vector v(ambient_.size());
  for (const auto& [k, c] : e.terms()) {
    auto it = column_.find(k);
    if (it == column_.end()) throw InvariantViolation("element term outside the graded piece of weight " + std::to_string(weight_));
    v[it->second] = c;
  }
  return v;
}

Vector GradedPiece::coordinates(const ModuleElement& e) const {
  return reducer_.quotient_coordinates(ambient_vector(e));
}

bool GradedPiece::is_zero_class(const ModuleElement& e) const { return reducer_.contains(ambient_vector(e)); }

ModuleElement GradedPiece::lift(std::size_t k) const {
  const BasisKey& key = ambient_.at(reducer_.free_columns().at(k));
  return ModuleElement::basis(key.generator, key.monomial);
}

ModuleElement GradedPiece::lift(std::span<const Rational> coords) const {
  ModuleElement out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    const BasisKey& key = ambient_.at(reducer_.free_columns().at(k));
    out.add(key.generator, key.monomial, coords[k]);
  }
  return out;
}

GradedPiece module_graded_piece(const PresentedModule& m, int d, int degree_limit) {
  if (d > degree_limit || d < -degree_limit)
    throw BudgetExceeded("graded piece of weight " + std::to_string(d) + " exceeds the degree limit " +
                         std::to_string(degree_limit));
  const auto& ring = *m.ring();
  std::vector<BasisKey> ambient;
  for (std::size_t g = 0; g < m.generators().size(); ++g) {
    const int rest = d - m.generators()[g].weight;
    if (rest < 0) continue;
    for (const auto& mon : ring.monomials_of_weight(rest)) ambient.push_back(BasisKey{static_cast<int>(g), mon});
  }
  std::map<BasisKey, std::size_t> column;
  for (std::size_t i = 0; i < ambient.size(); ++i) column.emplace(ambient[i], i);

  std::vector<Vector> rows;
  auto push = [&](const ModuleElement& e) {
    if (e.is_zero()) return;
    Vector row(ambient.size());
    for (const auto& [k, c] : e.terms()) {
      auto it = column.find(k);
      if (it == column.end()) throw InvariantViolation("relation term outside the graded piece");
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  };

  for (const auto& r : m.relations()) {
    const int wr = *m.element_weight(r);
    if (wr > d) continue;
    for (const auto& mon : ring.monomials_of_weight(d - wr)) push(r.times_monomial(mon));
  }
  for (const auto& g : m.scene().ideal().generators()) {
    const int dg = *weighted_degree(g);
    for (std::size_t k = 0; k < m.generators().size(); ++k) {
      const int rest = d - dg - m.generators()[k].weight;
      if (rest < 0) continue;
      for (const auto& mon : ring.monomials_of_weight(rest)) {
        ModuleElement e;
        e.add(static_cast<int>(k), g.times_monomial(mon));
        push(e);
      }
    }
  }
  for (const auto& slice : m.slice_relations())
    for (const auto& e : slice(d)) push(e);

  return GradedPiece(d, std::move(ambient), rows);
}

PresentedModule free_module(const AffineScene& scene, std::vector<ModuleGenerator> generators) {
  return PresentedModule(scene, std::move(generators));
}

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != ring_->nvars()) throw InputError("derivation needs one coefficient per variable");
  for (auto& c : coefficients_)
    if (!c.ring()) c = Polynomial(ring_);
}

Derivation Derivation::coordinate(RingPtr ring, std::size_t j) {
  std::vector<Polynomial> c(ring->nvars(), Polynomial(ring));
  c.at(j) = Polynomial(ring, Rational(1));
  return Derivation(ring, std::move(c));
}

Derivation Derivation::zero(RingPtr ring) {
  std::vector<Polynomial> c(ring->nvars(), Polynomial(ring));
  return Derivation(ring, std::move(c));
}

Polynomial Derivation::apply(const Polynomial& p) const {
  Polynomial out(ring_);
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j].is_zero()) continue;
    out += coefficients_[j] * partial_derivative(p, j);
  }
  return out;
}

std::optional<int> Derivation::weight() const {
  std::optional<int> w;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j].is_zero()) continue;
    auto d = weighted_degree(coefficients_[j]);
    if (!d) return std::nullopt;
    const int wj = *d - ring_->weight(j);
    if (w && *w != wj) return std::nullopt;
    w = wj;
  }
  return w;
}

bool Derivation::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = coefficients_[j].to_string();
    const std::string field = "d" + ring_->names()[j];
    if (c == "1") {
      out += field;
    } else if (coefficients_[j].size() > 1) {
      out += "(" + c + ")*" + field;
    } else {
      out += c + "*" + field;
    }
  }
  return out.empty() ? "0" : out;
}

Derivation Derivation::operator+(const Derivation& other) const {
  std::vector<Polynomial> c = coefficients_;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += other.coefficients_[j];
  return Derivation(ring_, std::move(c));
}

Derivation Derivation::operator*(const Rational& s) const {
  std::vector<Polynomial> c = coefficients_;
  for (auto& p : c) p = p * s;
  return Derivation(ring_, std::move(c));
}

Derivation bracket(const Derivation& a, const Derivation& b) {
  std::vector<Polynomial> c;
  for (std::size_t k = 0; k < a.coefficients().size(); ++k)
    c.push_back(a.apply(b.coefficient(k)) - b.apply(a.coefficient(k)));
  return Derivation(a.ring(), std::move(c));
}

bool is_tangent(const Derivation& a, const AffineScene& scene) {
  if (scene.ideal().empty()) return true;
  GroebnerBasis gb = buchberger(scene.ideal());
  for (const auto& g : scene.ideal().generators())
    if (!ideal_contains(gb, a.apply(g))) return false;
  return true;
}

DerivationPiece derivation_module_piece(const AffineScene& scene, int d, int degree_limit) {
  const auto& ring = scene.ring();
  const std::size_t n = ring->nvars();
  std::vector<ModuleGenerator> fields;
  for (std::size_t j = 0; j < n; ++j) fields.push_back({"d" + ring->names()[j], -ring->weight(j)});
  const PresentedModule tuples = free_module(scene, fields);
  const GradedPiece source = module_graded_piece(tuples, d, degree_limit);

  DerivationPiece out;
  out.weight = d;
  if (source.dim() == 0) return out;

  // Evaluation map into (+)_g (O_Y)_{d + deg g}, one free generator per ideal generator.
  const auto& gens = scene.ideal().generators();
  std::vector<ModuleGenerator> targets;
  for (std::size_t g = 0; g < gens.size(); ++g) targets.push_back({"g" + std::to_string(g), *weighted_degree(gens[g])});

  std::vector<Derivation> lifts;
  for (std::size_t k = 0; k < source.dim(); ++k) {
    const ModuleElement e = source.lift(k);
    std::vector<Polynomial> coeffs;
    for (std::size_t j = 0; j < n; ++j) coeffs.push_back(e.component(static_cast<int>(j), ring));
    lifts.emplace_back(ring, std::move(coeffs));
  }
  if (gens.empty()) {
    out.basis = std::move(lifts);
    return out;
  }

  // Each generator's value lands in a different weight, so the target is a
  // direct sum of pieces of the free module; stack their coordinates.
  std::vector<GradedPiece> target_pieces;
  std::size_t rows = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    // value sum_j a_j dg/dx_j has weight d + deg g; the generator itself carries weight 0
    PresentedModule single = free_module(scene, {{targets[g].label, 0}});
    target_pieces.push_back(module_graded_piece(single, d + targets[g].weight, degree_limit + targets[g].weight));
    rows += target_pieces.back().dim();
  }
  Matrix eval(rows, source.dim());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    std::size_t offset = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      ModuleElement value;
      value.add(0, lifts[k].apply(gens[g]));
      Vector coords = target_pieces[g].coordinates(value);
      for (std::size_t r = 0; r < coords.size(); ++r) eval(offset + r, k) = coords[r];
      offset += target_pieces[g].dim();
    }
  }
  for (const auto& kernel_vector : rank_kernel_image(eval).kernel_basis) {
    Derivation combo = Derivation::zero(ring);
    for (std::size_t k = 0; k < kernel_vector.size(); ++k)
      if (sgn(kernel_vector[k]) != 0) combo = combo + lifts[k] * kernel_vector[k];
    out.basis.push_back(std::move(combo));
  }
  return out;
}

}  // namespace spencerlab
