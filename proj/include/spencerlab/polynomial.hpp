#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spencerlab/rational.hpp"

namespace spencerlab {

/// Exponent vector; its length equals the ring's variable count.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int& operator[](std::size_t i) { return exponents[i]; }

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divides(other).
  Monomial operator/(const Monomial& other) const;

  // Plain lexicographic comparison of exponent vectors (storage order).
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Variable names with positive integer weights.
class WeightedRing {
 public:
  WeightedRing(std::vector<std::string> names, std::vector<int> weights);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  int min_weight() const;
  int max_weight() const;
  int weight_sum() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  int weighted_degree(const Monomial& m) const;

  /// All monomials of weighted degree d, in descending lexicographic order.
  const std::vector<Monomial>& monomials_of_weight(int d) const;

  std::string monomial_to_string(const Monomial& m) const;

  bool operator==(const WeightedRing& other) const {
    return names_ == other.names_ && weights_ == other.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<Monomial>> monomial_cache_;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights);

/// Exact multivariate polynomial over the rationals.  Terms are kept with
/// nonzero coefficients only.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& constant);
  Polynomial(RingPtr ring, const Monomial& m, const Rational& coeff = 1);

  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial pow(int e) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  /// Terms in canonical print order: descending weighted degree, then
  /// descending lexicographic exponent order.
  std::vector<std::pair<Monomial, Rational>> canonical_terms() const;
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Weighted degree of a nonzero polynomial, or nullopt when its terms have
/// different weights.  Throws InputError on the zero polynomial.
std::optional<int> weighted_degree(const Polynomial& p);
bool is_weighted_homogeneous(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Parses + - * ^ / ( ) over integer literals and the ring's variables.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace spencerlab
