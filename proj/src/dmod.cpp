#include "spencerlab/dmod.hpp"

#include <algorithm>
#include <memory>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {

// c!/(c-k)!
Integer falling_factorial(int c, int k) {
  Integer out = 1;
  for (int t = 0; t < k; ++t) out *= c - t;
  return out;
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// All exponent vectors k with 0 <= k_j <= bound_j.
void for_each_below(const Monomial& bound, const std::function<void(const Monomial&)>& f) {
  Monomial k(bound.size());
  while (true) {
    f(k);
    std::size_t j = 0;
    while (j < bound.size() && k[j] == bound[j]) {
      k[j] = 0;
      ++j;
    }
    if (j == bound.size()) return;
    ++k[j];
  }
}

std::string default_name(std::size_t j, std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (n <= 4) return names[j];
  return "x" + std::to_string(j + 1);
}

}  // namespace

DiffOperator DiffOperator::function(const Polynomial& f) {
  DiffOperator out(f.ring());
  const Monomial none(f.ring()->nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, none, c);
  return out;
}

DiffOperator DiffOperator::partial(RingPtr ring, std::size_t j) {
  const std::size_t n = ring->nvars();
  if (j >= n) throw InputError("partial derivative index out of range");
  return term(ring, Monomial(n), Monomial::variable(n, j));
}

DiffOperator DiffOperator::term(RingPtr ring, const Monomial& a, const Monomial& b, const Rational& c) {
  DiffOperator out(std::move(ring));
  out.add_term(a, b, c);
  return out;
}

void DiffOperator::add_term(const Monomial& a, const Monomial& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int DiffOperator::order() const {
  int out = -1;
  for (const auto& [key, c] : terms_) out = std::max(out, key.second.total_degree());
  return out;
}

std::optional<int> DiffOperator::weight() const {
  std::optional<int> out;
  for (const auto& [key, c] : terms_) {
    const int w = ring_->weighted_degree(key.first) - ring_->weighted_degree(key.second);
    if (out && *out != w) return std::nullopt;
    out = w;
  }
  return out;
}

DiffOperator DiffOperator::operator+(const DiffOperator& other) const {
  DiffOperator out = *this;
  if (!out.ring_) out.ring_ = other.ring_;
  for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
  return out;
}

DiffOperator DiffOperator::operator-(const DiffOperator& other) const { return *this + other * Rational(-1); }

DiffOperator DiffOperator::operator*(const Rational& c) const {
  DiffOperator out(ring_);
  for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
  return out;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
  Polynomial out(ring_);
  for (const auto& [key, c] : terms_) {
    Polynomial q = p;
    for (std::size_t j = 0; j < key.second.size(); ++j)
      for (int t = 0; t < key.second[j]; ++t) q = partial_derivative(q, j);
    out += q.times_monomial(key.first, c);
  }
  return out;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> ordered(terms_.begin(), terms_.end());
  // higher order first, then descending x exponent
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const int ol = l.first.second.total_degree();
    const int orr = r.first.second.total_degree();
    if (ol != orr) return ol > orr;
    if (l.first.second != r.first.second) return l.first.second > r.first.second;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [key, c] : ordered) {
    std::string factor;
    if (!key.first.is_one()) factor = ring_->monomial_to_string(key.first);
    for (std::size_t j = 0; j < key.second.size(); ++j) {
      if (key.second[j] == 0) continue;
      if (!factor.empty()) factor += "*";
      factor += "D" + ring_->names()[j];
      if (key.second[j] > 1) factor += "^" + std::to_string(key.second[j]);
    }
    Rational mag = abs(c);
    std::string piece;
    if (factor.empty()) {
      piece = spencerlab::to_string(mag);
    } else {
      piece = mag == 1 ? factor : spencerlab::to_string(mag) + "*" + factor;
    }
    if (out.empty()) {
      out = c < 0 ? "-" + piece : piece;
    } else {
      out += c < 0 ? " - " + piece : " + " + piece;
    }
  }
  return out;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b, int order_bound) {
  RingPtr ring = a.ring() ? a.ring() : b.ring();
  DiffOperator out(ring);
  if (a.is_zero() || b.is_zero()) return out;
  if (order_bound >= 0 && a.order() + b.order() > order_bound)
    throw BudgetExceeded("operator product has order " + std::to_string(a.order() + b.order()) +
                         " above the bound " + std::to_string(order_bound));
  // x^a d^b * x^c d^e = sum_k prod_j C(b_j, k_j) c_j!/(c_j - k_j)! x^{a+c-k} d^{b+e-k}
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Monomial& db = ka.second;
      const Monomial& xc = kb.first;
      Monomial bound(db.size());
      for (std::size_t j = 0; j < db.size(); ++j) bound[j] = std::min(db[j], xc[j]);
      for_each_below(bound, [&](const Monomial& k) {
        Integer coeff = 1;
        for (std::size_t j = 0; j < k.size(); ++j) coeff *= binomial(db[j], k[j]) * falling_factorial(xc[j], k[j]);
        out.add_term(ka.first * (xc / k), (db / k) * kb.second, ca * cb * Rational(coeff));
      });
    }
  return out;
}

Polynomial augmentation(const DiffOperator& a) {
  Polynomial out(a.ring());
  for (const auto& [key, c] : a.terms())
    if (key.second.is_one()) out.add_term(key.first, c);
  return out;
}

AffineScene affine_space(std::size_t n) {
  if (n == 0) throw InputError("affine space needs at least one variable");
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back(default_name(j, n));
  return AffineScene(make_ring(std::move(names), std::vector<int>(n, 1)), "A" + std::to_string(n));
}

GradedComplex filtered_spencer(const AffineScene& ambient, int p) {
  if (p < 1) throw InputError("filtered Spencer complex needs order budget p >= 1, got " + std::to_string(p));
  const AffineScene scene = ambient.ambient();
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();

  // operator basis d^b with |b| <= q, per q
  struct Layout {
    std::vector<Monomial> ops;            // d-exponents, |b| <= p - i
    std::map<Monomial, std::size_t> op_index;
    ExteriorBasis wedge{0, 0};
  };
  auto layouts = std::make_shared<std::map<int, Layout>>();
  std::vector<ComplexTerm> terms;
  terms.push_back({-1, free_module(scene, {{"1", 0}})});
  for (std::size_t i = 0; i <= n && static_cast<int>(i) <= p; ++i) {
    Layout layout;
    for (int q = 0; q <= p - static_cast<int>(i); ++q)
      for (int w = 0; w <= q * ring->max_weight(); ++w)
        for (const auto& m : ring->monomials_of_weight(w))
          if (m.total_degree() == q) layout.ops.push_back(m);
    std::sort(layout.ops.begin(), layout.ops.end(), [](const Monomial& l, const Monomial& r) {
      if (l.total_degree() != r.total_degree()) return l.total_degree() < r.total_degree();
      return l > r;
    });
    layout.ops.erase(std::unique(layout.ops.begin(), layout.ops.end()), layout.ops.end());
    for (std::size_t k = 0; k < layout.ops.size(); ++k) layout.op_index[layout.ops[k]] = k;
    layout.wedge = ExteriorBasis(n, i);

    std::vector<ModuleGenerator> gens;
    for (const auto& b : layout.ops)
      for (const auto& s : layout.wedge.subsets()) {
        std::string label;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[j] == 0) continue;
          if (!label.empty()) label += "*";
          label += "D" + ring->names()[j];
          if (b[j] > 1) label += "^" + std::to_string(b[j]);
        }
        if (label.empty()) label = "1";
        if (i > 0) {
          label += " (x) ";
          for (std::size_t t = 0; t < s.size(); ++t) label += (t ? "^D" : "D") + ring->names()[s[t]];
        }
        int weight = -ring->weighted_degree(b);
        for (auto j : s) weight -= ring->weight(j);
        gens.push_back({label, weight});
      }
    terms.push_back({static_cast<int>(i), free_module(scene, gens)});
    (*layouts)[static_cast<int>(i)] = std::move(layout);
  }

  auto differential = [layouts](int index, int generator, const Monomial& x) {
    ModuleElement out;
    if (index < 0) return out;
    const Layout& src = layouts->at(index);
    const std::size_t width = src.wedge.size();
    const Monomial& b = src.ops[static_cast<std::size_t>(generator) / width];
    if (index == 0) {
      // augmentation: x^a d^b (1) = x^a if b = 0
      if (b.is_one()) out.add(0, x, Rational(1));
      return out;
    }
    const Layout& dst = layouts->at(index - 1);
    const auto& subset = src.wedge.subsets()[static_cast<std::size_t>(generator) % width];
    for (std::size_t t = 0; t < subset.size(); ++t) {
      std::vector<std::size_t> rest = subset;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      Monomial raised = b;
      raised[subset[t]] += 1;  // x^a d^b * d_j is already normal-ordered
      const std::size_t g = dst.op_index.at(raised) * dst.wedge.size() + dst.wedge.index_of(rest);
      out.add(static_cast<int>(g), x, Rational(t % 2 == 0 ? 1 : -1));
    }
    return out;
  };
  return GradedComplex("filtered_spencer(p=" + std::to_string(p) + ")", Direction::Homological, std::move(terms),
                       differential);
}

GradedComplex filtered_spencer(std::size_t n, int p) { return filtered_spencer(affine_space(n), p); }

KashiwaraQuotient kashiwara_quotient(const AffineScene& scene, int p, int degree_bound) {
  if (p < 0) throw InputError("operator order bound must be non-negative");
  const auto ring = scene.ring();
  const std::size_t n = ring->nvars();
  std::vector<ModuleGenerator> gens;
  for (int q = 0; q <= p; ++q) {
    std::vector<Monomial> level;
    for (int w = q * ring->min_weight(); w <= q * ring->max_weight(); ++w)
      for (const auto& m : ring->monomials_of_weight(w))
        if (m.total_degree() == q) level.push_back(m);
    std::sort(level.begin(), level.end(), std::greater<>());
    for (const auto& b : level) {
      std::string label;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        if (!label.empty()) label += "*";
        label += "D" + ring->names()[j];
        if (b[j] > 1) label += "^" + std::to_string(b[j]);
      }
      gens.push_back({label.empty() ? "1" : label, -ring->weighted_degree(b)});
    }
  }
  // I * F^pD is the ideal times every generator: left multiplication by
  // functions lands in normal order without rewriting.
  KashiwaraQuotient out{scene, p, degree_bound, free_module(scene, gens), {}, 0, 0, false};
  const int low = -p * ring->max_weight();
  if (degree_bound < low) throw InputError("degree bound below the lowest operator weight");

  int nilpotency = 0;
  for (int d = low; d <= degree_bound; ++d) {
    const GradedPiece piece = module_graded_piece(out.module, d, std::max(256, degree_bound));
    if (piece.dim() == 0) continue;
    out.dims[d] = piece.dim();
    out.total_dimension += piece.dim();
    // smallest k with g^k acting as zero on this component, for every generator g
    int needed = 1;
    for (const auto& g : scene.ideal().generators()) {
      const int deg = *weighted_degree(g);
      int k = 1;
      std::vector<ModuleElement> current;
      for (std::size_t t = 0; t < piece.dim(); ++t) current.push_back(piece.lift(t));
      int weight = d;
      while (true) {
        weight += deg;
        const GradedPiece target = module_graded_piece(out.module, weight, std::max(256, weight));
        bool all_zero = true;
        std::vector<ModuleElement> next;
        for (const auto& e : current) {
          ModuleElement image = e.times(g);
          if (!target.is_zero_class(image)) all_zero = false;
          next.push_back(target.lift(target.coordinates(image)));
        }
        if (all_zero) break;
        if (++k > 64) throw BudgetExceeded("left multiplication is not nilpotent within 64 steps");
        current = std::move(next);
      }
      needed = std::max(needed, k);
    }
    if (scene.ideal().empty()) needed = 0;
    nilpotency = std::max(nilpotency, needed);
  }
  out.nilpotency_index = nilpotency;
  out.supported_on_subvariety = !scene.ideal().empty() && (out.total_dimension == 0 || nilpotency >= 1);
  return out;
}

HomologyTable pushforward_point(const DModule& m, const AffineScene& scene, int degree_bound) {
  return homology_table(build_spencer_of_module(m, scene), degree_bound);
}

}  // namespace spencerlab
