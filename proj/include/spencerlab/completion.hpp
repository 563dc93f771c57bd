#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spencerlab/builders.hpp"

namespace spencerlab {

/// Inverse system of graded complexes, stage r = 1..R, with chain maps
/// stage r+1 -> stage r given on ambient elements.
struct Tower {
  using Transition = std::function<ModuleElement(int r, int index, const ModuleElement& e)>;

  std::string name;
  Ideal ideal;
  int degree_bound = 0;
  std::vector<GradedComplex> stages;
  Transition transition;  // (r, index, element of stage r+1) -> element of stage r

  int stage_count() const { return static_cast<int>(stages.size()); }
  const GradedComplex& stage(int r) const { return stages.at(static_cast<std::size_t>(r - 1)); }
  std::vector<int> indices() const;
  int min_weight() const;

  /// Matrix of stage r+1 -> stage r on the (index, weight) pieces.
  Matrix transition_matrix(int r, int index, int weight) const;
  /// Rank of the map induced on homology, stage s -> stage r (s > r).
  std::size_t homology_map_rank(int s, int r, int index, int weight) const;
};

/// Quotient of a complex by the subcomplex generated by J^r C, i.e.
/// C / (J^r C + d(J^r C)); for O-linear differentials this is C (x) O/J^r.
GradedComplex truncate_along(const GradedComplex& c, const Ideal& ideal, int r);

/// Stages large enough that every weight <= D is stable in the last three.
int default_stage_count(const GradedComplex& c, const Ideal& ideal, int degree_bound);

/// Stages M / J^r M with the natural surjections (a one-term tower).
Tower adic_tower(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound);
/// Stages c / (J^r c + d J^r c) with the natural surjections.
Tower completed_complex(const GradedComplex& c, const Ideal& ideal, int stages, int degree_bound);

/// Transitions r+1 -> r satisfying the chain-map identity on every piece?
/// Returns the failing (r, index, weight) triples.
std::vector<std::tuple<int, int, int>> check_chain_maps(const Tower& t);

struct LimitEntry {
  std::vector<std::size_t> stage_dims;  // homology of stage 1..R
  std::size_t lim = 0;
  std::size_t lim1 = 0;
  bool stabilized = false;
  int stable_from = 0;  // earliest stage from which transitions are isomorphisms (0: by images)
};

struct LimitReport {
  std::string name;
  int degree_bound = 0;
  int stages = 0;
  std::map<std::pair<int, int>, LimitEntry> entries;  // (index, weight)

  bool all_stabilized() const;
  /// lim dimensions of stabilized entries (nonzero only).
  HomologyTable limit_table() const;
  std::vector<std::pair<int, int>> unstabilized() const;
};

/// Degreewise lim / lim^1.  An entry is stabilized when the last two
/// transitions induce isomorphisms (lim = stable value), or when the images
/// of the last three stages in each other have constant rank (lim = that
/// rank; lim^1 = 0 since finite-dimensional towers are Mittag-Leffler).
/// Otherwise the entry is flagged "not stabilized".  Needs R >= 3.
LimitReport tower_limit(const Tower& t);

/// Tower of Kos(M; f_1^r, ..., f_k^r) (index -k = wedge^k) with transitions
/// multiplying the slot e_S by prod_{s in S} f_s.
Tower koszul_tower(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound);
LimitReport derived_completion(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound);

struct KoszulH0Row {
  int stage = 0;
  int weight = 0;
  std::size_t h0 = 0;
  std::size_t expected = 0;  // dim (F / (I^r + J) F)_weight
  std::size_t higher = 0;    // total dimension of H_{>=1} at this weight
};

struct KoszulH0Report {
  std::vector<KoszulH0Row> rows;
  bool matches = true;
  bool higher_vanishes = true;
};

/// Koszul complex of J on F, completed along I: H_0 of stage r against F/(I^r + J)F.
KoszulH0Report completed_koszul_h0(const PresentedModule& f, const Ideal& i, const Ideal& j, int stages,
                                   int degree_bound);

struct IndependenceReport {
  bool extension_valid = false;
  LimitReport de_rham_first, de_rham_second;
  LimitReport spencer_first, spencer_second;
  bool de_rham_equal = false;
  bool spencer_equal = false;
  std::vector<std::string> mismatches;
  bool equal() const { return de_rham_equal && spencer_equal; }
};

/// Throws InputError unless `second` is `first` re-embedded by fresh
/// variables that are themselves ideal generators.
void check_extension(const AffineScene& first, const AffineScene& second);

/// Completed ambient de Rham and completed filtered Spencer (order budget p)
/// along each scene's ideal; stabilized limit tables compared entry by entry.
/// stages <= 0 picks the stage count per complex.
IndependenceReport embedding_independence(const AffineScene& first, const AffineScene& second, int stages,
                                          int degree_bound, int p = 2);

}  // namespace spencerlab
