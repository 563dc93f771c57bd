#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spencerlab/scene.hpp"

namespace spencerlab {

enum class OrderKind { WeightedDegRevLex, Lex };

/// Term order on the monomials of a ring.  Weighted-degrevlex uses the ring's
/// weights: compare weighted degree, then reverse-lexicographically (the
/// monomial with the smaller exponent in the last differing variable is larger).
class MonomialOrder {
 public:
  MonomialOrder(RingPtr ring, OrderKind kind = OrderKind::WeightedDegRevLex) : ring_(std::move(ring)), kind_(kind) {}

  OrderKind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  /// True when a is strictly greater than b.
  bool greater(const Monomial& a, const Monomial& b) const;

 private:
  RingPtr ring_;
  OrderKind kind_;
};

std::size_t default_pair_budget();  // SPENCERLAB_BUDGET or 100000

struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

LeadingTerm leading_term(const Polynomial& p, const MonomialOrder& order);

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit() const;

 private:
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  MonomialOrder order_;
};

/// Reduced Groebner basis via Buchberger with normal pair selection and the
/// coprime-leading-monomial criterion.  Throws BudgetExceeded when more than
/// pair_budget S-pairs are examined.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         std::size_t pair_budget = default_pair_budget());
GroebnerBasis buchberger(const Ideal& ideal);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

struct QuotientDimension {
  std::optional<std::size_t> dimension;  // nullopt: infinite
  std::vector<Monomial> basis;           // standard monomials, ascending weight
  bool finite() const { return dimension.has_value(); }
};

QuotientDimension quotient_dimension(const GroebnerBasis& gb);
QuotientDimension quotient_dimension(const Ideal& ideal, OrderKind kind = OrderKind::WeightedDegRevLex);

}  // namespace spencerlab
