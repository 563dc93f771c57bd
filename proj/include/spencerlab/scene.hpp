#pragma once

#include <string>
#include <vector>

#include "spencerlab/matrix.hpp"
#include "spencerlab/polynomial.hpp"

namespace spencerlab {

/// Finite generating set of an ideal; zero generators are dropped on construction.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  /// Generators of the r-th power: all products of r generators (r >= 0).
  Ideal power(int r) const;
  Ideal operator+(const Ideal& other) const;
  bool is_weighted_homogeneous() const;
  /// Smallest weighted degree among the generators (generators assumed homogeneous).
  int min_generator_weight() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// A weighted ring with a weighted-homogeneous ideal, presenting Y inside affine space.
class AffineScene {
 public:
  /// Throws InputError if any generator is not weighted-homogeneous.
  AffineScene(RingPtr ring, Ideal ideal, std::string name = "");
  explicit AffineScene(RingPtr ring, std::string name = "");

  const RingPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const std::string& name() const { return name_; }
  std::size_t nvars() const { return ring_->nvars(); }

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, ring_); }
  AffineScene with_ideal(Ideal ideal) const { return AffineScene(ring_, std::move(ideal), name_); }
  /// The ambient affine space of the scene (same ring, zero ideal).
  AffineScene ambient() const { return AffineScene(ring_, name_); }

 private:
  RingPtr ring_;
  Ideal ideal_;
  std::string name_;
};

/// Weight-d slice of the ideal as a reducer over the monomials of weight d
/// (columns in ring.monomials_of_weight(d) order).
SubspaceReducer ideal_slice(const Ideal& ideal, int d);

/// Degreewise membership test for a weighted-homogeneous polynomial, by exact
/// linear algebra on the span of {m * g}.
bool ideal_contains_degreewise(const Ideal& ideal, const Polynomial& p);

/// Monomial basis of (O_X / I)_d.
std::vector<Monomial> graded_component_basis(const AffineScene& scene, int d);

/// Hilbert function value: dim (O_X / I)_d.
std::size_t graded_component_dimension(const AffineScene& scene, int d);

}  // namespace spencerlab
