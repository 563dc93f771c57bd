#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spencerlab/builders.hpp"

namespace spencerlab {

/// Differential operator on A^n in normal order: sum c * x^a d^b (all x's left).
/// Weight of x_i is w_i, weight of d_i is -w_i.
class DiffOperator {
 public:
  using Key = std::pair<Monomial, Monomial>;  // (x exponents, d exponents)
  using TermMap = std::map<Key, Rational>;

  DiffOperator() = default;
  explicit DiffOperator(RingPtr ring) : ring_(std::move(ring)) {}

  static DiffOperator function(const Polynomial& f);
  static DiffOperator partial(RingPtr ring, std::size_t j);
  static DiffOperator term(RingPtr ring, const Monomial& a, const Monomial& b, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& a, const Monomial& b, const Rational& c);

  /// Highest |b| among the terms; -1 for the zero operator.
  int order() const;
  /// Weighted degree; nullopt when inhomogeneous or zero.
  std::optional<int> weight() const;

  DiffOperator operator+(const DiffOperator& other) const;
  DiffOperator operator-(const DiffOperator& other) const;
  DiffOperator operator*(const Rational& c) const;
  bool operator==(const DiffOperator& other) const { return terms_ == other.terms_; }

  /// Action on polynomials (left action).
  Polynomial apply(const Polynomial& p) const;
  std::string to_string() const;  // "x*D1^2 + 2*D1", D_j for d/dx_j

 private:
  RingPtr ring_;
  TermMap terms_;
};

/// Normal-ordered product a*b.  Throws BudgetExceeded when the product has
/// order above order_bound (order_bound < 0: unbounded).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b, int order_bound = -1);

/// Zero-order part: the operator applied to the constant 1.
Polynomial augmentation(const DiffOperator& a);

/// Ambient affine space with default variable names (x, y, z, w, then x1..xn) and unit weights.
AffineScene affine_space(std::size_t n);

/// Augmented filtered Spencer complex F^{p-i}D (x) wedge^i T -> ... -> F^p D -> O
/// on the ambient space of `ambient` (its ideal is ignored).  Homological;
/// index i >= 0 for the resolution, index -1 for O.  The differential is right
/// multiplication d_S -> sum_t (-1)^t d_{s_t} (x) d_{S - s_t}; bracket terms vanish
/// for coordinate fields.  Generator d^b (x) d_S has weight -w.b - w_S.
GradedComplex filtered_spencer(const AffineScene& ambient, int p);
GradedComplex filtered_spencer(std::size_t n, int p);

/// F^p D / I * F^p D with left O_X action, graded pieces for weights in
/// [-p * max_weight, D].
struct KashiwaraQuotient {
  AffineScene scene;
  int p = 0;
  int degree_bound = 0;
  PresentedModule module;
  std::map<int, std::size_t> dims;  // weight -> dim, nonzero only
  std::size_t total_dimension = 0;
  /// Smallest k with (left multiplication by every generator)^k = 0 on every
  /// computed component; 0 when the quotient vanishes.
  int nilpotency_index = 0;
  bool supported_on_subvariety = false;
};

KashiwaraQuotient kashiwara_quotient(const AffineScene& scene, int p, int degree_bound);

/// Spencer homology of a module with derivation action: its pushforward to a point.
HomologyTable pushforward_point(const DModule& m, const AffineScene& scene, int degree_bound);

}  // namespace spencerlab
