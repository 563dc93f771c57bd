#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "spencerlab/module.hpp"

namespace spencerlab {

/// Homological complexes lower the index (Koszul, Spencer); cohomological
/// ones raise it (de Rham, jets).
enum class Direction { Homological, Cohomological };

std::string to_string(Direction d);

struct ComplexTerm {
  int index = 0;
  PresentedModule module;
};

/// Complex of finitely presented graded modules with a weight-preserving
/// differential, evaluated lazily one weight at a time.  The differential is
/// given on ambient basis elements (monomial * generator) of each term and
/// must descend to the quotients; pieces and matrices are cached.
class GradedComplex {
 public:
  /// Image of m * generator of term `index` in the ambient free module of the next term.
  using Differential = std::function<ModuleElement(int index, int generator, const Monomial& m)>;

  GradedComplex(std::string name, Direction direction, std::vector<ComplexTerm> terms, Differential differential);

  const std::string& name() const { return state_->name; }
  Direction direction() const { return state_->direction; }
  const std::vector<ComplexTerm>& terms() const { return state_->terms; }
  const ComplexTerm* term(int index) const;
  const Differential& differential_rule() const { return state_->differential; }

  int next_index(int i) const { return direction() == Direction::Homological ? i - 1 : i + 1; }
  int previous_index(int i) const { return direction() == Direction::Homological ? i + 1 : i - 1; }
  std::vector<int> indices() const;
  /// Lowest weight at which some term can be nonzero.
  int min_weight() const;

  ModuleElement apply_differential(int index, const ModuleElement& e) const;
  const GradedPiece& piece(int index, int weight) const;
  std::size_t dim(int index, int weight) const { return piece(index, weight).dim(); }
  /// Matrix of the differential out of (index, weight); rows index the target piece.
  const Matrix& differential(int index, int weight) const;

  /// Same differential, each term's module replaced.
  GradedComplex with_modules(std::string name, const std::function<PresentedModule(const ComplexTerm&)>& f) const;

 private:
  struct State {
    std::string name;
    Direction direction;
    std::vector<ComplexTerm> terms;
    Differential differential;
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<GradedPiece>> pieces;
    std::map<std::pair<int, int>, std::unique_ptr<Matrix>> matrices;
  };
  std::shared_ptr<State> state_;
};

/// Nonzero homology dimensions keyed by (index, weight).
class HomologyTable {
 public:
  HomologyTable() = default;
  HomologyTable(int min_weight, int degree_bound) : min_weight_(min_weight), degree_bound_(degree_bound) {}

  void set(int index, int weight, std::size_t dim);
  std::size_t at(int index, int weight) const;
  bool is_zero() const { return entries_.empty(); }
  int degree_bound() const { return degree_bound_; }
  int min_weight() const { return min_weight_; }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  /// index -> weight -> dim, nonzero entries only.
  std::map<int, std::map<int, std::size_t>> by_index() const;

  bool operator==(const HomologyTable& other) const { return entries_ == other.entries_; }

 private:
  int min_weight_ = 0;
  int degree_bound_ = 0;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

/// dim H at every (index, weight) with min_weight <= weight <= D.  Aborts
/// with InvariantViolation if d*d != 0 or the Euler characteristic per weight
/// is not conserved.
HomologyTable homology_table(const GradedComplex& c, int degree_bound);

/// Component dimensions dim C_(index, weight), nonzero entries only.
HomologyTable component_table(const GradedComplex& c, int degree_bound);

/// Throws InvariantViolation naming the first piece where d*d != 0.
void check_d_squared(const GradedComplex& c, int degree_bound);

/// Homology dimension at one spot.
std::size_t homology_dimension(const GradedComplex& c, int index, int weight);

/// Subsets of {0..n-1} of size k in lexicographic order, with reverse lookup.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, std::size_t k);
  const std::vector<std::vector<std::size_t>>& subsets() const { return subsets_; }
  std::size_t size() const { return subsets_.size(); }
  std::size_t index_of(const std::vector<std::size_t>& subset) const { return lookup_.at(subset); }

 private:
  std::vector<std::vector<std::size_t>> subsets_;
  std::map<std::vector<std::size_t>, std::size_t> lookup_;
};

/// e_j ^ e_S for sorted S: the sorted union and the sign (0 if j is in S).
std::pair<std::vector<std::size_t>, int> wedge_left(std::size_t j, const std::vector<std::size_t>& subset);

}  // namespace spencerlab
