#include "spencerlab/builders.hpp"

#include <algorithm>
#include <memory>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {

std::string wedge_label(const std::vector<std::string>& symbols, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return "1";
  std::string out;
  for (auto s : subset) {
    if (!out.empty()) out += '^';
    out += symbols[s];
  }
  return out;
}

int subset_weight(const std::vector<int>& weights, const std::vector<std::size_t>& subset) {
  int w = 0;
  for (auto s : subset) w += weights[s];
  return w;
}

std::vector<std::string> differential_symbols(const WeightedRing& ring) {
  std::vector<std::string> out;
  for (const auto& n : ring.names()) out.push_back("d" + n);
  return out;
}

}  // namespace

GradedComplex build_koszul(const AffineScene& scene, const std::vector<Polynomial>& elements) {
  return build_koszul(free_module(scene, {{"1", 0}}), elements);
}

GradedComplex build_koszul(const PresentedModule& module, const std::vector<Polynomial>& elements,
                           bool cohomological_indexing) {
  const std::size_t count = elements.size();
  std::vector<int> degrees;
  std::vector<std::string> symbols;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& f = elements[k];
    if (f.is_zero()) {
      degrees.push_back(0);
    } else {
      auto d = weighted_degree(f);
      if (!d) throw InputError("Koszul element '" + f.to_string() + "' is not weighted-homogeneous");
      degrees.push_back(*d);
    }
    symbols.push_back("e" + std::to_string(k + 1));
  }

  auto bases = std::make_shared<std::vector<ExteriorBasis>>();
  std::vector<ComplexTerm> terms;
  for (std::size_t k = 0; k <= count; ++k) {
    bases->emplace_back(count, k);
    const auto& basis = bases->back();
    std::vector<ModuleGenerator> gens;
    for (const auto& mg : module.generators())
      for (const auto& s : basis.subsets()) {
        std::string label = wedge_label(symbols, s);
        if (mg.label != "1") label = label == "1" ? mg.label : mg.label + "*" + label;
        gens.push_back({label, mg.weight + subset_weight(degrees, s)});
      }
    std::vector<ModuleElement> relations;
    for (const auto& rel : module.relations())
      for (std::size_t s = 0; s < basis.size(); ++s) {
        ModuleElement lifted;
        for (const auto& [key, c] : rel.terms())
          lifted.add(static_cast<int>(key.generator * basis.size() + s), key.monomial, c);
        relations.push_back(std::move(lifted));
      }
    const int index = cohomological_indexing ? -static_cast<int>(k) : static_cast<int>(k);
    terms.push_back({index, PresentedModule(module.scene(), std::move(gens), std::move(relations))});
  }

  auto differential = [bases, elements, cohomological_indexing](int index, int generator, const Monomial& m) {
    ModuleElement out;
    const int k = cohomological_indexing ? -index : index;
    if (k <= 0) return out;
    const auto& basis = (*bases)[k];
    const auto& lower = (*bases)[k - 1];
    const std::size_t g = static_cast<std::size_t>(generator) / basis.size();
    const auto& subset = basis.subsets()[static_cast<std::size_t>(generator) % basis.size()];
    for (std::size_t t = 0; t < subset.size(); ++t) {
      std::vector<std::size_t> rest = subset;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      const int target = static_cast<int>(g * lower.size() + lower.index_of(rest));
      const Rational sign = t % 2 == 0 ? 1 : -1;
      out.add(target, elements[subset[t]].times_monomial(m), sign);
    }
    return out;
  };
  return GradedComplex("koszul", cohomological_indexing ? Direction::Cohomological : Direction::Homological,
                       std::move(terms), differential);
}

PresentedModule kahler_forms(const AffineScene& scene, int degree) {
  const auto& ring = *scene.ring();
  const std::size_t n = ring.nvars();
  if (degree < 0 || static_cast<std::size_t>(degree) > n) throw InputError("form degree out of range");
  const auto symbols = differential_symbols(ring);
  ExteriorBasis basis(n, degree);
  std::vector<ModuleGenerator> gens;
  for (const auto& s : basis.subsets()) gens.push_back({wedge_label(symbols, s), subset_weight(ring.weights(), s)});

  // dg ^ dx_T for every generator g and |T| = degree - 1.
  std::vector<ModuleElement> relations;
  if (degree >= 1) {
    ExteriorBasis lower(n, degree - 1);
    for (const auto& g : scene.ideal().generators()) {
      for (const auto& t : lower.subsets()) {
        ModuleElement rel;
        for (std::size_t j = 0; j < n; ++j) {
          auto [s, sign] = wedge_left(j, t);
          if (sign == 0) continue;
          rel.add(static_cast<int>(basis.index_of(s)), partial_derivative(g, j), sign);
        }
        relations.push_back(std::move(rel));
      }
    }
  }
  return PresentedModule(scene, std::move(gens), std::move(relations));
}

GradedComplex build_de_rham(const AffineScene& scene) {
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();
  auto bases = std::make_shared<std::vector<ExteriorBasis>>();
  std::vector<ComplexTerm> terms;
  for (std::size_t i = 0; i <= n; ++i) {
    bases->emplace_back(n, i);
    terms.push_back({static_cast<int>(i), kahler_forms(scene, static_cast<int>(i))});
  }
  auto differential = [bases, n](int index, int generator, const Monomial& m) {
    ModuleElement out;
    if (static_cast<std::size_t>(index) >= n) return out;
    const auto& subset = (*bases)[index].subsets()[generator];
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      auto [s, sign] = wedge_left(j, subset);
      if (sign == 0) continue;
      Monomial dm = m;
      dm[j] -= 1;
      out.add(static_cast<int>((*bases)[index + 1].index_of(s)), dm, Rational(sign * m[j]));
    }
    return out;
  };
  return GradedComplex("de_rham", Direction::Cohomological, std::move(terms), differential);
}

AffineScene thickened_diagonal(const AffineScene& scene, int r) {
  if (r < 0) throw InputError("jet order must be non-negative");
  const auto& ring = *scene.ring();
  const std::size_t n = ring.nvars();
  std::vector<std::string> names = ring.names();
  std::vector<int> weights = ring.weights();
  for (std::size_t j = 0; j < n; ++j) {
    std::string copy = ring.names()[j] + "_2";
    while (std::find(names.begin(), names.end(), copy) != names.end()) copy += "_";
    names.push_back(copy);
    weights.push_back(ring.weight(j));
  }
  RingPtr doubled = make_ring(std::move(names), std::move(weights));

  auto embed = [&](const Polynomial& p, std::size_t offset) {
    Polynomial out(doubled);
    for (const auto& [m, c] : p.terms()) {
      Monomial e(2 * n);
      for (std::size_t j = 0; j < n; ++j) e[offset + j] = m[j];
      out.add_term(e, c);
    }
    return out;
  };
  std::vector<Polynomial> gens;
  for (const auto& g : scene.ideal().generators()) {
    gens.push_back(embed(g, 0));
    gens.push_back(embed(g, n));
  }
  std::vector<Polynomial> diagonal;
  for (std::size_t j = 0; j < n; ++j)
    diagonal.push_back(Polynomial::variable(doubled, j) - Polynomial::variable(doubled, n + j));
  Ideal delta_power = Ideal(doubled, diagonal).power(r + 1);
  for (const auto& g : delta_power.generators()) gens.push_back(g);
  const std::string name = scene.name().empty() ? "" : scene.name() + "_jet" + std::to_string(r);
  return AffineScene(doubled, Ideal(doubled, std::move(gens)), name);
}

GradedComplex build_jet_complex(const AffineScene& scene, int r) {
  if (r < 0 || r > 2) throw InputError("jet complex supports r in {0, 1, 2}, got " + std::to_string(r));
  GradedComplex c = build_de_rham(thickened_diagonal(scene, r));
  return c.with_modules("jet" + std::to_string(r), [](const ComplexTerm& t) { return t.module; });
}

DModule structure_sheaf_module(const AffineScene& scene) {
  DModule out{"O", free_module(scene, {{"1", 0}}), {}};
  out.act = [](std::size_t j, int generator, const Monomial& m) {
    ModuleElement e;
    if (m[j] == 0) return e;
    Monomial dm = m;
    dm[j] -= 1;
    e.add(generator, dm, Rational(m[j]));
    return e;
  };
  return out;
}

DModule differential_forms_module(const AffineScene& scene, int degree) {
  if (!scene.ideal().empty()) throw InputError("D-module structures are only provided on affine space");
  DModule out{"omega" + std::to_string(degree), kahler_forms(scene, degree), {}};
  // L_{d/dx_j}(f dx_S) = (df/dx_j) dx_S since d/dx_j(x_k) is constant.
  out.act = structure_sheaf_module(scene).act;
  return out;
}

DModule dmodule_by_name(const AffineScene& scene, const std::string& name) {
  if (name == "O") return structure_sheaf_module(scene);
  if (name == "omega-top") return differential_forms_module(scene, static_cast<int>(scene.nvars()));
  if (name.rfind("omega", 0) == 0) {
    const std::string rest = name.substr(5);
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
      const int k = std::stoi(rest);
      if (k <= static_cast<int>(scene.nvars())) return differential_forms_module(scene, k);
    }
  }
  throw InputError("unknown module '" + name + "' (expected O, omega1, omega-top or omega<k>)");
}

GradedComplex build_spencer_of_module(const DModule& dm, const AffineScene& scene) {
  if (!scene.ideal().empty())
    throw InputError("Spencer complex of a module needs a free tangent module; the scene ideal must be empty");
  if (!dm.act) throw InputError("module '" + dm.kind + "' has no derivation action");
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();
  const int total = ring->weight_sum();
  const PresentedModule& m = dm.module;
  const std::size_t rank_m = m.generators().size();

  std::vector<std::string> fields;
  for (const auto& name : ring->names()) fields.push_back("D" + name);

  // Term at de Rham index j = n - i; generator g * |basis_i| + s  <->  gen_g (x) d_S.
  auto bases = std::make_shared<std::vector<ExteriorBasis>>();
  for (std::size_t i = 0; i <= n; ++i) bases->emplace_back(n, i);
  std::vector<ComplexTerm> terms;
  for (std::size_t i = 0; i <= n; ++i) {
    const auto& basis = (*bases)[i];
    std::vector<ModuleGenerator> gens;
    for (std::size_t g = 0; g < rank_m; ++g)
      for (const auto& s : basis.subsets()) {
        const auto& mg = m.generators()[g];
        std::string label = mg.label == "1" ? wedge_label(fields, s) : mg.label + "*" + wedge_label(fields, s);
        gens.push_back({label, mg.weight + total - subset_weight(ring->weights(), s)});
      }
    std::vector<ModuleElement> relations;
    for (const auto& rel : m.relations())
      for (std::size_t s = 0; s < basis.size(); ++s) {
        ModuleElement lifted;
        for (const auto& [key, c] : rel.terms())
          lifted.add(static_cast<int>(key.generator * basis.size() + s), key.monomial, c);
        relations.push_back(std::move(lifted));
      }
    terms.push_back({static_cast<int>(n - i), PresentedModule(scene, std::move(gens), std::move(relations))});
  }

  std::vector<Derivation> coordinate_fields;
  for (std::size_t j = 0; j < n; ++j) coordinate_fields.push_back(Derivation::coordinate(ring, j));
  auto act = dm.act;

  auto differential = [bases, n, act, coordinate_fields](int index, int generator, const Monomial& mono) {
    ModuleElement out;
    const std::size_t i = n - static_cast<std::size_t>(index);
    if (i == 0) return out;
    const auto& basis = (*bases)[i];
    const auto& lower = (*bases)[i - 1];
    const std::size_t g = static_cast<std::size_t>(generator) / basis.size();
    const auto& subset = basis.subsets()[static_cast<std::size_t>(generator) % basis.size()];

    // sum_t (-1)^t (xi_{s_t} m) (x) xi_{S - s_t}
    for (std::size_t t = 0; t < subset.size(); ++t) {
      std::vector<std::size_t> rest = subset;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      const std::size_t target_s = lower.index_of(rest);
      const Rational sign = t % 2 == 0 ? 1 : -1;
      const ModuleElement moved = act(subset[t], static_cast<int>(g), mono);
      for (const auto& [key, c] : moved.terms())
        out.add(static_cast<int>(key.generator * lower.size() + target_s), key.monomial, c * sign);
    }
    // sum_{a<b} (-1)^{a+b} m (x) [xi_a, xi_b] ^ xi_{S - {a,b}}
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b) {
        const Derivation br = bracket(coordinate_fields[subset[a]], coordinate_fields[subset[b]]);
        if (br.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < subset.size(); ++t)
          if (t != a && t != b) rest.push_back(subset[t]);
        const Rational sign = (a + b) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < n; ++k) {
          if (br.coefficient(k).is_zero()) continue;
          auto [s, wsign] = wedge_left(k, rest);
          if (wsign == 0) continue;
          const std::size_t target_s = lower.index_of(s);
          for (const auto& [m2, c2] : br.coefficient(k).terms())
            out.add(static_cast<int>(g * lower.size() + target_s), mono * m2, c2 * sign * wsign);
        }
      }
    return out;
  };
  return GradedComplex("spencer(" + dm.kind + ")", Direction::Cohomological, std::move(terms), differential);
}

}  // namespace spencerlab
