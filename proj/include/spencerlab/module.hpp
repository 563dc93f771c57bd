#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spencerlab/matrix.hpp"
#include "spencerlab/scene.hpp"

namespace spencerlab {

/// One ambient basis vector of a free module: monomial times generator.
struct BasisKey {
  int generator = 0;
  Monomial monomial;

  auto operator<=>(const BasisKey&) const = default;
  bool operator==(const BasisKey&) const = default;
};

/// Element of a free graded module over the polynomial ring, as a sparse
/// combination of (monomial, generator) pairs.
class ModuleElement {
 public:
  using TermMap = std::map<BasisKey, Rational>;

  ModuleElement() = default;

  static ModuleElement basis(int generator, const Monomial& m, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int generator, const Monomial& m, const Rational& c);
  void add(int generator, const Polynomial& coeff, const Rational& scale = 1);
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement operator*(const Rational& c) const;
  ModuleElement times_monomial(const Monomial& m, const Rational& c = 1) const;
  ModuleElement times(const Polynomial& p) const;

  /// Coefficient polynomial of one generator.
  Polynomial component(int generator, const RingPtr& ring) const;

  bool operator==(const ModuleElement&) const = default;

 private:
  TermMap terms_;
};

struct ModuleGenerator {
  std::string label;
  int weight = 0;
};

/// Finitely presented graded module over O_Y = O_X / I.  Relations are
/// homogeneous module elements generating a submodule of the free module on
/// the generators; the scene's ideal times every generator is always added.
/// Optional slice relations contribute explicit weight-e vectors that are not
/// multiplied by monomials (used for subcomplexes like J C + d(J C)).
class PresentedModule {
 public:
  using SliceRelations = std::function<std::vector<ModuleElement>(int weight)>;

  PresentedModule(AffineScene scene, std::vector<ModuleGenerator> generators,
                  std::vector<ModuleElement> relations = {});

  const AffineScene& scene() const { return scene_; }
  const RingPtr& ring() const { return scene_.ring(); }
  const std::vector<ModuleGenerator>& generators() const { return generators_; }
  const std::vector<ModuleElement>& relations() const { return relations_; }
  const std::vector<SliceRelations>& slice_relations() const { return slice_relations_; }
  std::size_t rank() const { return generators_.size(); }
  int min_generator_weight() const;

  /// Weight of a homogeneous element; nullopt when inhomogeneous or zero.
  std::optional<int> element_weight(const ModuleElement& e) const;

  PresentedModule with_relations(std::vector<ModuleElement> extra) const;
  PresentedModule with_slice_relations(SliceRelations extra) const;
  /// Adds ideal * generator for every generator (quotient by ideal * M).
  PresentedModule modulo_ideal(const Ideal& ideal) const;

  std::string element_label(const BasisKey& key) const;

 private:
  AffineScene scene_;
  std::vector<ModuleGenerator> generators_;
  std::vector<ModuleElement> relations_;
  std::vector<SliceRelations> slice_relations_;
};

/// Weight-d component of a presented module: the ambient span of
/// (monomial x generator) of weight d, modulo the weight-d slice of the
/// relation submodule.  Quotient basis vectors are ambient basis keys.
class GradedPiece {
 public:
  GradedPiece() = default;
  GradedPiece(int weight, std::vector<BasisKey> ambient, const std::vector<Vector>& relation_rows);

  int weight() const { return weight_; }
  std::size_t dim() const { return reducer_.quotient_dim(); }
  std::size_t ambient_dim() const { return ambient_.size(); }
  const std::vector<BasisKey>& ambient() const { return ambient_; }
  /// Ambient keys whose classes form the quotient basis.
  std::vector<BasisKey> basis() const;

  /// Ambient coordinate vector of a homogeneous element of this weight.
  Vector ambient_vector(const ModuleElement& e) const;
  /// Coordinates of the class of e in the quotient basis.
  Vector coordinates(const ModuleElement& e) const;
  Vector coordinates_of_ambient(std::span<const Rational> v) const { return reducer_.quotient_coordinates(v); }
  bool is_zero_class(const ModuleElement& e) const;
  /// Representative of the k-th quotient basis vector.
  ModuleElement lift(std::size_t k) const;
  ModuleElement lift(std::span<const Rational> coords) const;

 private:
  int weight_ = 0;
  std::vector<BasisKey> ambient_;
  std::map<BasisKey, std::size_t> column_;
  SubspaceReducer reducer_;
};

/// Weight-d component.  Throws BudgetExceeded when d exceeds degree_limit.
GradedPiece module_graded_piece(const PresentedModule& m, int d, int degree_limit = 64);

/// Free module O_Y^k with the given generators (no relations beyond the ideal).
PresentedModule free_module(const AffineScene& scene, std::vector<ModuleGenerator> generators);

/// Vector field  sum_j c_j d/dx_j  on the ambient affine space.
class Derivation {
 public:
  Derivation() = default;
  Derivation(RingPtr ring, std::vector<Polynomial> coefficients);

  static Derivation coordinate(RingPtr ring, std::size_t j);
  static Derivation zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }
  const Polynomial& coefficient(std::size_t j) const { return coefficients_[j]; }

  Polynomial apply(const Polynomial& p) const;
  /// Weighted degree (coefficient weight minus variable weight); nullopt if
  /// inhomogeneous or zero.
  std::optional<int> weight() const;
  bool is_zero() const;
  std::string to_string() const;  // e.g. "2*x*dx + 3*y*dy"

  Derivation operator+(const Derivation& other) const;
  Derivation operator*(const Rational& c) const;
  bool operator==(const Derivation& other) const { return coefficients_ == other.coefficients_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> coefficients_;
};

/// Commutator [a, b] as a first-order operator: [a,b]_k = a(b_k) - b(a_k).
Derivation bracket(const Derivation& a, const Derivation& b);

/// Tangency to Y: a(g) in I for every ideal generator g (checked by Groebner reduction).
bool is_tangent(const Derivation& a, const AffineScene& scene);

struct DerivationPiece {
  int weight = 0;
  std::vector<Derivation> basis;  // representatives modulo I * Der(O_X)
  std::size_t dim() const { return basis.size(); }
};

/// Weight-d derivations of O_Y: kernel of  (a_j) in (+)_j (O_Y)_{d + w_j}
///   ->  (+)_g (O_Y)_{d + deg g},  a |-> (sum_j a_j dg/dx_j mod I)_g.
DerivationPiece derivation_module_piece(const AffineScene& scene, int d, int degree_limit = 64);

}  // namespace spencerlab
