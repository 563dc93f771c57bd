#include "spencerlab/euler.hpp"

#include <algorithm>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {

// Sorts an index list; returns the sign of the permutation, 0 on repeats.
int sort_with_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b + 1 < v.size() - a; ++b) {
      if (v[b] == v[b + 1]) return 0;
      if (v[b] > v[b + 1]) {
        std::swap(v[b], v[b + 1]);
        sign = -sign;
      }
    }
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] == v[k - 1]) return 0;
  return sign;
}

int field_weight(const Derivation& xi) {
  if (xi.is_zero()) return 0;
  auto w = xi.weight();
  if (!w) throw InputError("vector field '" + xi.to_string() + "' is not weighted-homogeneous");
  return *w;
}

void require_forms(const GradedComplex& c) {
  if (c.direction() != Direction::Cohomological || !c.term(0))
    throw InputError("complex '" + c.name() + "' is not a de Rham-type complex of forms");
}

// Matrix of a map on ambient elements between two pieces of c.
Matrix piece_matrix(const GradedComplex& c, int src_index, int src_weight, int dst_index, int dst_weight,
                    const std::function<ModuleElement(const ModuleElement&)>& f) {
  const GradedPiece& src = c.piece(src_index, src_weight);
  const GradedPiece& dst = c.piece(dst_index, dst_weight);
  Matrix m(dst.dim(), src.dim());
  if (dst.dim() == 0) return m;
  for (std::size_t k = 0; k < src.dim(); ++k) {
    const Vector col = dst.coordinates(f(src.lift(k)));
    for (std::size_t r = 0; r < col.size(); ++r) m(r, k) = col[r];
  }
  return m;
}

}  // namespace

Derivation euler_derivation(const AffineScene& scene) {
  const auto ring = scene.ring();
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < ring->nvars(); ++j)
    coeffs.push_back(Polynomial::variable(ring, j) * Rational(ring->weight(j)));
  Derivation xi(ring, std::move(coeffs));
  for (const auto& g : scene.ideal().generators()) {
    const int deg = *weighted_degree(g);
    if (!(xi.apply(g) == g * Rational(deg)))
      throw InvariantViolation("Euler field is not tangent to generator " + g.to_string());
  }
  return xi;
}

ModuleElement lie_derivative(const Derivation& xi, int form_degree, const ModuleElement& form) {
  const auto& ring = xi.ring();
  const std::size_t n = ring->nvars();
  ExteriorBasis basis(n, static_cast<std::size_t>(form_degree));
  ModuleElement out;
  for (const auto& [key, c] : form.terms()) {
    const auto& subset = basis.subsets()[key.generator];
    const Polynomial f(ring, key.monomial, c);
    out.add(key.generator, xi.apply(f));
    for (std::size_t t = 0; t < subset.size(); ++t) {
      const Polynomial& coeff = xi.coefficient(subset[t]);
      for (std::size_t j = 0; j < n; ++j) {
        const Polynomial dj = partial_derivative(coeff, j);
        if (dj.is_zero()) continue;
        std::vector<std::size_t> slots = subset;
        slots[t] = j;
        const int sign = sort_with_sign(slots);
        if (sign == 0) continue;
        out.add(static_cast<int>(basis.index_of(slots)), dj * f, Rational(sign));
      }
    }
  }
  return out;
}

ModuleElement interior_product(const Derivation& xi, int form_degree, const ModuleElement& form) {
  if (form_degree < 1) throw InputError("interior product needs form degree >= 1");
  const auto& ring = xi.ring();
  const std::size_t n = ring->nvars();
  ExteriorBasis basis(n, static_cast<std::size_t>(form_degree));
  ExteriorBasis lower(n, static_cast<std::size_t>(form_degree - 1));
  ModuleElement out;
  for (const auto& [key, c] : form.terms()) {
    const auto& subset = basis.subsets()[key.generator];
    for (std::size_t t = 0; t < subset.size(); ++t) {
      std::vector<std::size_t> rest = subset;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      out.add(static_cast<int>(lower.index_of(rest)), xi.coefficient(subset[t]).times_monomial(key.monomial, c),
              Rational(t % 2 == 0 ? 1 : -1));
    }
  }
  return out;
}

Matrix lie_derivative_matrix(const GradedComplex& c, const Derivation& xi, int i, int d) {
  require_forms(c);
  const int e = field_weight(xi);
  return piece_matrix(c, i, d, i, d + e, [&](const ModuleElement& m) { return lie_derivative(xi, i, m); });
}

Matrix interior_product_matrix(const GradedComplex& c, const Derivation& xi, int i, int d) {
  require_forms(c);
  const int e = field_weight(xi);
  if (i < 1) return Matrix(0, c.dim(i, d));
  return piece_matrix(c, i, d, i - 1, d + e, [&](const ModuleElement& m) { return interior_product(xi, i, m); });
}

CartanReport cartan_check(const GradedComplex& c, const Derivation& xi, int degree_bound) {
  require_forms(c);
  const int e = field_weight(xi);
  CartanReport report;
  for (int d = c.min_weight(); d <= degree_bound; ++d)
    for (int i : c.indices()) {
      ++report.pieces_checked;
      const Matrix lie = lie_derivative_matrix(c, xi, i, d);
      Matrix rhs(lie.rows(), lie.cols());
      if (c.term(i - 1)) rhs = rhs + c.differential(i - 1, d + e) * interior_product_matrix(c, xi, i, d);
      if (c.term(i + 1)) rhs = rhs + interior_product_matrix(c, xi, i + 1, d) * c.differential(i, d);
      if (!(rhs == lie)) {
        report.holds = false;
        report.violations.emplace_back(i, d);
      }
    }
  return report;
}

AcyclicityCertificate acyclicity_certificate(const GradedComplex& c, const Derivation& xi, int degree_bound,
                                             int min_form_degree) {
  require_forms(c);
  if (min_form_degree < 1)
    throw InputError("acyclicity certificates cover form degrees >= 1 only; degree 0 was requested");
  if (field_weight(xi) != 0) throw InputError("the homotopy needs a weight-0 vector field");

  AcyclicityCertificate cert;
  cert.complex_name = c.name();
  cert.derivation = xi.to_string();
  cert.degree_bound = degree_bound;
  cert.min_form_degree = min_form_degree;
  cert.max_form_degree = c.indices().back();
  cert.cartan = cartan_check(c, xi, degree_bound).holds;

  // h_i = iota o L^{-1} on (i, d); nullopt when L is singular there.
  auto homotopy = [&](int i, int d) -> std::optional<Matrix> {
    const std::size_t dim = c.dim(i, d);
    if (dim == 0) return Matrix(c.dim(i - 1, d), 0);
    const Matrix lie = lie_derivative_matrix(c, xi, i, d);
    if (rank(lie) != dim) return std::nullopt;
    return interior_product_matrix(c, xi, i, d) * inverse(lie);
  };

  bool ok = cert.cartan;
  for (int i : c.indices()) {
    if (i < min_form_degree) continue;
    for (int d = c.min_weight(); d <= degree_bound; ++d) {
      CertifiedPiece piece;
      piece.form_degree = i;
      piece.weight = d;
      piece.dim = c.dim(i, d);
      auto h = homotopy(i, d);
      auto h_next = c.term(i + 1) ? homotopy(i + 1, d) : std::optional<Matrix>(Matrix(c.dim(i, d), 0));
      piece.lie_bijective = h.has_value();
      if (h && h_next) {
        Matrix sum(piece.dim, piece.dim);
        if (piece.dim > 0) {
          sum = c.differential(i - 1, d) * *h;
          if (c.term(i + 1)) sum = sum + *h_next * c.differential(i, d);
        }
        piece.homotopy_identity = sum == Matrix::identity(piece.dim);
      }
      piece.homology = homology_dimension(c, i, d);
      const bool good = piece.lie_bijective && piece.homotopy_identity && piece.homology == 0;
      if (!good && !cert.refused) cert.refused = std::make_pair(i, d);
      ok = ok && good;
      cert.pieces.push_back(piece);
    }
  }
  cert.valid = ok;
  return cert;
}

PairingReport contraction_pairing(std::size_t n, std::size_t i, int degree_bound) {
  if (i > n) throw InputError("polyvector degree " + std::to_string(i) + " exceeds dimension " + std::to_string(n));
  std::vector<std::string> names;
  static const char* defaults[] = {"x", "y", "z", "w"};
  for (std::size_t j = 0; j < n; ++j) names.push_back(n <= 4 ? defaults[j] : "x" + std::to_string(j + 1));
  const RingPtr ring = make_ring(names, std::vector<int>(n, 1));
  const AffineScene space(ring, "A" + std::to_string(n));

  ExteriorBasis fields(n, i);
  ExteriorBasis forms(n, n - i);
  std::vector<ModuleGenerator> source_gens;
  for (const auto& s : fields.subsets()) {
    std::string label = "vol";
    for (std::size_t t = 0; t < s.size(); ++t) label += (t ? "^D" : " (x) D") + names[s[t]];
    source_gens.push_back({label, static_cast<int>(n - s.size())});
  }
  std::vector<ModuleGenerator> target_gens;
  for (const auto& s : forms.subsets()) target_gens.push_back({std::to_string(s.size()), static_cast<int>(s.size())});
  const PresentedModule source = free_module(space, source_gens);
  const PresentedModule target = free_module(space, target_gens);

  // iota_{d_S} vol = iota_{d_{s_k}} ... iota_{d_{s_1}} vol
  std::vector<ModuleElement> images;
  for (const auto& s : fields.subsets()) {
    ModuleElement form = ModuleElement::basis(0, Monomial(n));
    int degree = static_cast<int>(n);
    for (auto j : s) form = interior_product(Derivation::coordinate(ring, j), degree--, form);
    images.push_back(form);
  }

  PairingReport report{n, i, degree_bound, true, {}, {}};
  for (int d = 0; d <= degree_bound; ++d) {
    const GradedPiece src = module_graded_piece(source, d);
    const GradedPiece dst = module_graded_piece(target, d);
    if (src.dim() == 0 && dst.dim() == 0) continue;
    Matrix m(dst.dim(), src.dim());
    for (std::size_t k = 0; k < src.dim(); ++k) {
      const ModuleElement lifted = src.lift(k);
      ModuleElement image;
      for (const auto& [key, c] : lifted.terms()) image += images[key.generator].times_monomial(key.monomial, c);
      const Vector col = dst.coordinates(image);
      for (std::size_t r = 0; r < col.size(); ++r) m(r, k) = col[r];
    }
    const std::size_t rk = rank(m);
    report.ranks.emplace_back(d, rk);
    if (rk != src.dim() || rk != dst.dim()) {
      report.bijective = false;
      report.failures.push_back(d);
    }
  }
  return report;
}

}  // namespace spencerlab
