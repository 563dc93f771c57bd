#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spencerlab/rational.hpp"

namespace spencerlab {

using Vector = std::vector<Rational>;

/// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  bool is_zero() const;
  Matrix transposed() const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Vector apply(std::span<const Rational> v) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;                    // only the nonzero rows are kept
  std::vector<std::size_t> pivots;   // pivots[k] = pivot column of row k, increasing
};

enum class Elimination { Automatic, Bareiss, Sparse };

// Fraction-free elimination on the integer-scaled rows.  Bareiss for dense
// matrices; sparse or heavily redundant ones use primitive-row elimination
// (gcd cofactors, content removal), which leaves untouched rows alone.
RowEchelon row_reduce(const Matrix& m, Elimination method = Elimination::Automatic);

std::size_t rank(const Matrix& m);

/// Labeled linear map; matrix is target x source.
struct LinearMap {
  std::vector<std::string> source_basis;
  std::vector<std::string> target_basis;
  Matrix matrix;
};

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;  // vectors in source coordinates
  std::vector<Vector> image_basis;   // vectors in target coordinates
};

RankKernelImage rank_kernel_image(const Matrix& m);
RankKernelImage rank_kernel_image(const LinearMap& map);

/// Inverse of a square matrix; throws InputError when singular.
Matrix inverse(const Matrix& m);

/// Reduces vectors modulo a fixed subspace (given by spanning rows).
/// Columns not used as pivots index a basis of the quotient space.
class SubspaceReducer {
 public:
  SubspaceReducer() = default;
  SubspaceReducer(const Matrix& spanning_rows);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t subspace_dim() const { return echelon_.pivots.size(); }
  std::size_t quotient_dim() const { return free_columns_.size(); }
  const std::vector<std::size_t>& free_columns() const { return free_columns_; }
  const std::vector<std::size_t>& pivot_columns() const { return echelon_.pivots; }

  /// v minus its component along the pivot rows; zero on every pivot column.
  Vector reduce(Vector v) const;
  /// Coordinates of the class of v in the quotient basis (free columns).
  Vector quotient_coordinates(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;

 private:
  std::size_t ambient_dim_ = 0;
  RowEchelon echelon_;
  std::vector<std::size_t> free_columns_;
};

}  // namespace spencerlab
