#include "spencerlab/matrix.hpp"

#include <algorithm>
#include <utility>

#include "spencerlab/errors.hpp"

namespace spencerlab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvariantViolation("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw InvariantViolation("matrix product: dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvariantViolation("matrix sum: dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvariantViolation("matrix difference: dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvariantViolation("matrix apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

namespace {

// Each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (sgn(q) != 0) scale = lcm(scale, q.get_den());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (sgn(q) != 0) rows[r][c] = q.get_num() * (scale / q.get_den());
    }
  }
  return rows;
}

}  // namespace

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // increasing column

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Cancels the entry of `row` at column `col` against `pivot` (whose leading entry sits there).
void eliminate(SparseRow& row, const Integer& entry, const SparseRow& pivot) {
  const Integer& lead = pivot.front().second;
  const Integer g = gcd(lead, entry);
  row = combine(lead / g, row, entry / g, pivot);
  make_primitive(row);
}

Integer entry_at(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? it->second : Integer(0);
}

// Fraction-free elimination on sparse primitive rows: rows are combined by
// gcd-reduced cofactors and divided by their content, so untouched rows keep
// their sparsity.  Rows are fed one at a time; stops once the rank is full.
RowEchelon sparse_row_reduce(const Matrix& m, const std::vector<std::vector<Integer>>& a) {
  const std::size_t ncols = m.cols();
  std::vector<SparseRow> pivots;
  std::vector<long> pivot_of(ncols, -1);
  for (std::size_t r = 0; r < m.rows() && pivots.size() < ncols; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < ncols; ++c)
      if (sgn(a[r][c]) != 0) row.emplace_back(c, a[r][c]);
    make_primitive(row);
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      if (pivot_of[lead] < 0) {
        pivot_of[lead] = static_cast<long>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      const Integer entry = row.front().second;
      eliminate(row, entry, pivots[static_cast<std::size_t>(pivot_of[lead])]);
    }
  }

  RowEchelon out;
  for (std::size_t c = 0; c < ncols; ++c)
    if (pivot_of[c] >= 0) out.pivots.push_back(c);
  out.reduced = Matrix(out.pivots.size(), ncols);
  if (out.pivots.size() == ncols) {
    for (std::size_t k = 0; k < ncols; ++k) out.reduced(k, k) = 1;
    return out;
  }
  // back substitution, last pivot first, so each row meets fully reduced ones
  std::vector<SparseRow> ordered;
  for (auto c : out.pivots) ordered.push_back(std::move(pivots[static_cast<std::size_t>(pivot_of[c])]));
  for (std::size_t k = ordered.size(); k-- > 0;) {
    for (std::size_t t = k + 1; t < ordered.size(); ++t) {
      const Integer entry = entry_at(ordered[k], out.pivots[t]);
      if (sgn(entry) != 0) eliminate(ordered[k], entry, ordered[t]);
    }
  }
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const Integer& lead = ordered[k].front().second;
    for (const auto& [c, v] : ordered[k]) {
      out.reduced(k, c) = Rational(v, lead);
      out.reduced(k, c).canonicalize();
    }
  }
  return out;
}

RowEchelon bareiss_row_reduce(const Matrix& m, std::vector<std::vector<Integer>> a) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();

  // Bareiss: after processing pivot k every remaining entry is a (k+1)-minor,
  // so the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer value = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (!mpz_divisible_p(value.get_mpz_t(), previous.get_mpz_t()))
          throw InvariantViolation("Bareiss elimination: inexact division");
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(value);
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  RowEchelon out;
  out.pivots = pivots;
  out.reduced = Matrix(pivots.size(), ncols);
  Matrix& red = out.reduced;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& pivot = a[k][pivots[k]];
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sgn(a[k][j]) == 0) continue;
      red(k, j) = Rational(a[k][j], pivot);
      red(k, j).canonicalize();
    }
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      Rational factor = red(i, pivots[k]);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = pivots[k]; j < ncols; ++j)
        if (sgn(red(k, j)) != 0) red(i, j) -= factor * red(k, j);
    }
  }
  return out;
}

}  // namespace

RowEchelon row_reduce(const Matrix& m, Elimination method) {
  auto a = integer_rows(m);
  if (method == Elimination::Automatic) {
    std::size_t nonzero = 0;
    for (const auto& row : a)
      for (const auto& v : row)
        if (sgn(v) != 0) ++nonzero;
    // dense Bareiss rescales every row per pivot; sparse or tall inputs go row by row
    const bool sparse = 4 * nonzero < m.rows() * m.cols() || m.rows() > 2 * m.cols();
    method = sparse ? Elimination::Sparse : Elimination::Bareiss;
  }
  return method == Elimination::Sparse ? sparse_row_reduce(m, a) : bareiss_row_reduce(m, std::move(a));
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

RankKernelImage rank_kernel_image(const Matrix& m) {
  RankKernelImage out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Vector v(m.cols());
      v[c] = 1;
      out.kernel_basis.push_back(std::move(v));
    }
    return out;
  }
  RowEchelon e = row_reduce(m);
  out.rank = e.pivots.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    out.kernel_basis.push_back(std::move(v));
  }
  for (auto p : e.pivots) out.image_basis.push_back(m.column(p));
  return out;
}

RankKernelImage rank_kernel_image(const LinearMap& map) {
  if (map.matrix.rows() != map.target_basis.size() || map.matrix.cols() != map.source_basis.size())
    throw InputError("linear map: matrix shape does not match basis lengths");
  return rank_kernel_image(map.matrix);
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse: matrix is not square");
  if (n == 0) return Matrix();
  Matrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  RowEchelon e = row_reduce(augmented);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

SubspaceReducer::SubspaceReducer(const Matrix& spanning_rows) : ambient_dim_(spanning_rows.cols()) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() > 0) echelon_ = row_reduce(spanning_rows);
  std::vector<bool> is_pivot(ambient_dim_, false);
  for (auto p : echelon_.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_dim_; ++c)
    if (!is_pivot[c]) free_columns_.push_back(c);
}

Vector SubspaceReducer::reduce(Vector v) const {
  if (v.size() != ambient_dim_) throw InvariantViolation("SubspaceReducer: dimension mismatch");
  for (std::size_t k = 0; k < echelon_.pivots.size(); ++k) {
    const std::size_t p = echelon_.pivots[k];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    for (std::size_t j = p; j < ambient_dim_; ++j) {
      const Rational& e = echelon_.reduced(k, j);
      if (sgn(e) != 0) v[j] -= factor * e;
    }
  }
  return v;
}

Vector SubspaceReducer::quotient_coordinates(std::span<const Rational> v) const {
  Vector reduced = reduce(Vector(v.begin(), v.end()));
  Vector coords(free_columns_.size());
  for (std::size_t k = 0; k < free_columns_.size(); ++k) coords[k] = reduced[free_columns_[k]];
  return coords;
}

bool SubspaceReducer::contains(std::span<const Rational> v) const {
  Vector reduced = reduce(Vector(v.begin(), v.end()));
  return std::all_of(reduced.begin(), reduced.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace spencerlab
