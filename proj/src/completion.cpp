#include "spencerlab/completion.hpp"

#include <algorithm>
#include <memory>
#include <tuple>

#include "spencerlab/dmod.hpp"
#include "spencerlab/errors.hpp"
#include "spencerlab/groebner.hpp"

namespace spencerlab {

namespace {

bool has_constant_generator(const Ideal& ideal) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.is_constant(); });
}

int min_positive_generator_weight(const Ideal& ideal) {
  int out = 0;
  for (const auto& g : ideal.generators()) {
    const int d = *weighted_degree(g);
    if (d > 0) out = out == 0 ? d : std::min(out, d);
  }
  return out;
}

Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

}  // namespace

std::vector<int> Tower::indices() const { return stages.empty() ? std::vector<int>{} : stages.front().indices(); }

int Tower::min_weight() const {
  int out = 0;
  for (std::size_t k = 0; k < stages.size(); ++k) out = k == 0 ? stages[k].min_weight() : std::min(out, stages[k].min_weight());
  return out;
}

Matrix Tower::transition_matrix(int r, int index, int weight) const {
  const GradedPiece& src = stage(r + 1).piece(index, weight);
  const GradedPiece& dst = stage(r).piece(index, weight);
  Matrix m(dst.dim(), src.dim());
  if (dst.dim() == 0) return m;
  for (std::size_t k = 0; k < src.dim(); ++k) {
    const Vector col = dst.coordinates(transition(r, index, src.lift(k)));
    for (std::size_t row = 0; row < col.size(); ++row) m(row, k) = col[row];
  }
  return m;
}

std::size_t Tower::homology_map_rank(int s, int r, int index, int weight) const {
  if (s <= r) throw InputError("homology map must go from a later stage to an earlier one");
  Matrix composite = transition_matrix(s - 1, index, weight);
  for (int t = s - 2; t >= r; --t) composite = transition_matrix(t, index, weight) * composite;

  const GradedComplex& source = stage(s);
  const GradedComplex& target = stage(r);
  const std::size_t target_dim = target.dim(index, weight);
  if (target_dim == 0 || source.dim(index, weight) == 0) return 0;

  std::vector<Vector> cycles;
  if (source.term(source.next_index(index))) {
    cycles = rank_kernel_image(source.differential(index, weight)).kernel_basis;
  } else {
    for (std::size_t k = 0; k < source.dim(index, weight); ++k) {
      Vector v(source.dim(index, weight));
      v[k] = 1;
      cycles.push_back(std::move(v));
    }
  }
  std::vector<Vector> cols;
  for (const auto& z : cycles) cols.push_back(composite.apply(z));
  std::size_t boundary_rank = 0;
  if (target.term(target.previous_index(index))) {
    const Matrix& b = target.differential(target.previous_index(index), weight);
    for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.column(c));
    boundary_rank = rank(b);
  }
  return rank(columns_matrix(cols, target_dim)) - boundary_rank;
}

GradedComplex truncate_along(const GradedComplex& c, const Ideal& ideal, int r) {
  if (r < 1) throw InputError("tower stages start at r = 1");
  const Ideal power = ideal.power(r);
  const std::vector<Polynomial> gens = power.generators();
  return c.with_modules(c.name() + "/J^" + std::to_string(r), [&](const ComplexTerm& t) {
    PresentedModule m = t.module.modulo_ideal(power);
    const int prev = c.previous_index(t.index);
    const ComplexTerm* pt = c.term(prev);
    if (!pt) return m;
    // d(J^r C_prev): not multiplied by monomials, enumerated per weight
    const PresentedModule prev_module = pt->module;
    const GradedComplex parent = c;
    return m.with_slice_relations([parent, prev, prev_module, gens](int e) {
      std::vector<ModuleElement> out;
      const auto& ring = *prev_module.ring();
      for (const auto& g : gens) {
        const int dg = *weighted_degree(g);
        for (std::size_t k = 0; k < prev_module.generators().size(); ++k) {
          const int rest = e - dg - prev_module.generators()[k].weight;
          if (rest < 0) continue;
          for (const auto& mono : ring.monomials_of_weight(rest)) {
            ModuleElement image = parent.apply_differential(prev, ModuleElement::basis(static_cast<int>(k), mono).times(g));
            if (!image.is_zero()) out.push_back(std::move(image));
          }
        }
      }
      return out;
    });
  });
}

int default_stage_count(const GradedComplex& c, const Ideal& ideal, int degree_bound) {
  if (ideal.empty()) return 3;
  if (has_constant_generator(ideal)) return 3;
  const int g = min_positive_generator_weight(ideal);
  // J^r C vanishes in weights <= D once r * g + min_weight > D
  const int stable = std::max(1, (degree_bound - c.min_weight()) / g + 1);
  return stable + 2;
}

Tower completed_complex(const GradedComplex& c, const Ideal& ideal, int stages, int degree_bound) {
  for (const auto& g : ideal.generators())
    if (!is_weighted_homogeneous(g)) throw InputError("completion ideal must be weighted-homogeneous");
  if (stages <= 0) stages = default_stage_count(c, ideal, degree_bound);
  Tower t;
  t.name = c.name();
  t.ideal = ideal;
  t.degree_bound = degree_bound;
  for (int r = 1; r <= stages; ++r) t.stages.push_back(truncate_along(c, ideal, r));
  t.transition = [](int, int, const ModuleElement& e) { return e; };
  return t;
}

Tower adic_tower(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound) {
  GradedComplex single("module", Direction::Homological, {ComplexTerm{0, m}},
                       [](int, int, const Monomial&) { return ModuleElement(); });
  Tower t = completed_complex(single, ideal, stages, degree_bound);
  t.name = "adic";
  return t;
}

std::vector<std::tuple<int, int, int>> check_chain_maps(const Tower& t) {
  std::vector<std::tuple<int, int, int>> failures;
  for (int r = 1; r < t.stage_count(); ++r)
    for (int i : t.indices()) {
      const GradedComplex& upper = t.stage(r + 1);
      const GradedComplex& lower = t.stage(r);
      const int j = upper.next_index(i);
      if (!upper.term(j)) continue;
      for (int d = t.min_weight(); d <= t.degree_bound; ++d) {
        const Matrix left = lower.differential(i, d) * t.transition_matrix(r, i, d);
        const Matrix right = t.transition_matrix(r, j, d) * upper.differential(i, d);
        if (!(left == right)) failures.emplace_back(r, i, d);
      }
    }
  return failures;
}

bool LimitReport::all_stabilized() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.stabilized; });
}

HomologyTable LimitReport::limit_table() const {
  int low = 0;
  bool first = true;
  for (const auto& [key, e] : entries) {
    low = first ? key.second : std::min(low, key.second);
    first = false;
  }
  HomologyTable table(low, degree_bound);
  for (const auto& [key, e] : entries)
    if (e.stabilized) table.set(key.first, key.second, e.lim);
  return table;
}

std::vector<std::pair<int, int>> LimitReport::unstabilized() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, e] : entries)
    if (!e.stabilized) out.push_back(key);
  return out;
}

LimitReport tower_limit(const Tower& t) {
  LimitReport report;
  report.name = t.name;
  report.degree_bound = t.degree_bound;
  report.stages = t.stage_count();
  const int R = t.stage_count();
  for (int i : t.indices())
    for (int d = t.min_weight(); d <= t.degree_bound; ++d) {
      LimitEntry entry;
      for (int r = 1; r <= R; ++r) entry.stage_dims.push_back(homology_dimension(t.stage(r), i, d));
      const bool all_zero =
          std::all_of(entry.stage_dims.begin(), entry.stage_dims.end(), [](std::size_t v) { return v == 0; });
      if (all_zero) {
        entry.stabilized = R >= 1;
        entry.stable_from = 1;
      } else if (R >= 3) {
        auto h = [&](int r) { return entry.stage_dims[static_cast<std::size_t>(r - 1)]; };
        std::vector<bool> iso(static_cast<std::size_t>(R), false);  // iso[r]: stage r+1 -> r
        for (int r = 1; r < R; ++r)
          iso[static_cast<std::size_t>(r)] = h(r) == h(r + 1) && t.homology_map_rank(r + 1, r, i, d) == h(r);
        if (iso[static_cast<std::size_t>(R - 1)] && iso[static_cast<std::size_t>(R - 2)]) {
          entry.stabilized = true;
          entry.lim = h(R);
          int from = R - 2;
          while (from > 1 && iso[static_cast<std::size_t>(from - 1)]) --from;
          entry.stable_from = from;
        } else {
          const std::size_t a = t.homology_map_rank(R - 1, R - 2, i, d);
          const std::size_t b = t.homology_map_rank(R, R - 2, i, d);
          const std::size_t c = t.homology_map_rank(R, R - 1, i, d);
          if (a == b && b == c) {
            entry.stabilized = true;
            entry.lim = b;
            entry.stable_from = 0;
          }
        }
      }
      // finite-dimensional stages: Mittag-Leffler holds, lim^1 = 0
      entry.lim1 = 0;
      report.entries[{i, d}] = std::move(entry);
    }
  return report;
}

Tower koszul_tower(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound) {
  const std::vector<Polynomial> f = ideal.generators();
  for (const auto& g : f)
    if (!is_weighted_homogeneous(g) || *weighted_degree(g) <= 0)
      throw InputError("derived completion needs positive-weight homogeneous generators");
  if (stages <= 0) {
    stages = f.empty() ? 3 : (degree_bound - m.min_generator_weight()) / min_positive_generator_weight(ideal) + 3;
    stages = std::max(stages, 3);
  }
  Tower t;
  t.name = "derived";
  t.ideal = ideal;
  t.degree_bound = degree_bound;
  for (int r = 1; r <= stages; ++r) {
    std::vector<Polynomial> powers;
    for (const auto& g : f) powers.push_back(g.pow(r));
    t.stages.push_back(build_koszul(m, powers, true));
  }
  auto bases = std::make_shared<std::vector<ExteriorBasis>>();
  for (std::size_t k = 0; k <= f.size(); ++k) bases->emplace_back(f.size(), k);
  const RingPtr ring = m.ring();
  // e_S at stage r+1 -> (prod_{s in S} f_s) e_S at stage r
  t.transition = [bases, f, ring](int, int index, const ModuleElement& e) {
    const auto& basis = (*bases)[static_cast<std::size_t>(-index)];
    ModuleElement out;
    for (const auto& [key, c] : e.terms()) {
      const auto& subset = basis.subsets()[static_cast<std::size_t>(key.generator) % basis.size()];
      Polynomial factor(ring, Rational(1));
      for (auto s : subset) factor = factor * f[s];
      out += ModuleElement::basis(key.generator, key.monomial, c).times(factor);
    }
    return out;
  };
  return t;
}

LimitReport derived_completion(const PresentedModule& m, const Ideal& ideal, int stages, int degree_bound) {
  return tower_limit(koszul_tower(m, ideal, stages, degree_bound));
}

KoszulH0Report completed_koszul_h0(const PresentedModule& f, const Ideal& i, const Ideal& j, int stages,
                                   int degree_bound) {
  if (stages <= 0) throw InputError("completed Koszul comparison needs at least one stage");
  const GradedComplex kos = build_koszul(f, j.generators());
  const Tower t = completed_complex(kos, i, stages, degree_bound);
  KoszulH0Report report;
  const int low = f.generators().empty() ? 0 : f.min_generator_weight();
  for (int r = 1; r <= stages; ++r) {
    const PresentedModule quotient = f.modulo_ideal(i.power(r) + j);
    for (int d = low; d <= degree_bound; ++d) {
      KoszulH0Row row{r, d, homology_dimension(t.stage(r), 0, d), module_graded_piece(quotient, d).dim(), 0};
      for (int index : t.stage(r).indices())
        if (index >= 1) row.higher += homology_dimension(t.stage(r), index, d);
      report.matches = report.matches && row.h0 == row.expected;
      report.higher_vanishes = report.higher_vanishes && row.higher == 0;
      report.rows.push_back(row);
    }
  }
  return report;
}

void check_extension(const AffineScene& first, const AffineScene& second) {
  const auto& a = *first.ring();
  const auto& b = *second.ring();
  const std::size_t n = a.nvars();
  if (b.nvars() < n) throw InputError("second scene has fewer variables than the first");
  for (std::size_t k = 0; k < n; ++k)
    if (a.names()[k] != b.names()[k] || a.weight(k) != b.weight(k))
      throw InputError("second scene does not extend the first: variable " + a.names()[k] + " differs");
  // expected ideal: first ideal embedded, plus every fresh variable
  std::vector<Polynomial> expected;
  for (const auto& g : first.ideal().generators()) {
    Polynomial e(second.ring());
    for (const auto& [m, c] : g.terms()) {
      Monomial lifted(b.nvars());
      for (std::size_t k = 0; k < n; ++k) lifted[k] = m[k];
      e.add_term(lifted, c);
    }
    expected.push_back(e);
  }
  for (std::size_t k = n; k < b.nvars(); ++k) {
    const Polynomial v = Polynomial::variable(second.ring(), k);
    const bool listed = std::any_of(second.ideal().generators().begin(), second.ideal().generators().end(),
                                    [&](const Polynomial& g) {
                                      return g.size() == 1 && g.terms().begin()->first == v.terms().begin()->first;
                                    });
    if (!listed) throw InputError("fresh variable " + b.names()[k] + " is not an ideal generator of the second scene");
    expected.push_back(v);
  }
  const GroebnerBasis gb_expected = buchberger(Ideal(second.ring(), expected));
  const GroebnerBasis gb_second = buchberger(second.ideal());
  if (gb_expected.generators() != gb_second.generators())
    throw InputError("second scene's ideal is not the first ideal plus the fresh variables");
}

namespace {

void compare_limits(const LimitReport& a, const LimitReport& b, const std::string& label, int degree_bound,
                    bool& equal, std::vector<std::string>& mismatches) {
  equal = true;
  for (const auto& report : {&a, &b})
    for (const auto& [key, e] : report->entries)
      if (!e.stabilized && key.second <= degree_bound) {
        equal = false;
        mismatches.push_back(label + ": not stabilized at (" + std::to_string(key.first) + ", " +
                             std::to_string(key.second) + ")");
      }
  const auto ta = a.limit_table().entries();
  const auto tb = b.limit_table().entries();
  std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> merged;
  for (const auto& [k, v] : ta) merged[k].first = v;
  for (const auto& [k, v] : tb) merged[k].second = v;
  for (const auto& [k, v] : merged)
    if (k.second <= degree_bound && v.first != v.second) {
      equal = false;
      mismatches.push_back(label + ": (" + std::to_string(k.first) + ", " + std::to_string(k.second) +
                           ") " + std::to_string(v.first) + " vs " + std::to_string(v.second));
    }
}

}  // namespace

IndependenceReport embedding_independence(const AffineScene& first, const AffineScene& second, int stages,
                                          int degree_bound, int p) {
  check_extension(first, second);
  IndependenceReport report;
  report.extension_valid = true;

  auto limits = [&](const GradedComplex& c, const Ideal& ideal) {
    return tower_limit(completed_complex(c, ideal, stages, degree_bound));
  };
  report.de_rham_first = limits(build_de_rham(first.ambient()), first.ideal());
  report.de_rham_second = limits(build_de_rham(second.ambient()), second.ideal());
  report.spencer_first = limits(filtered_spencer(first, p), first.ideal());
  report.spencer_second = limits(filtered_spencer(second, p), second.ideal());
  compare_limits(report.de_rham_first, report.de_rham_second, "de Rham", degree_bound, report.de_rham_equal,
                 report.mismatches);
  compare_limits(report.spencer_first, report.spencer_second, "filtered Spencer", degree_bound,
                 report.spencer_equal, report.mismatches);
  return report;
}

}  // namespace spencerlab
