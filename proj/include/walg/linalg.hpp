#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a*x

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Matrix transpose() const;

  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivot rows are
/// chosen in column order, so the result is canonical for the row space.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);

/// Basis of {v : m v = 0}: one vector per free column, with a 1 in that column.
std::vector<Vec> kernel(const Matrix& m);

/// Canonical basis of span(vectors): the nonzero rows of the RREF of the
/// stacked vectors, ordered by pivot column.
std::vector<Vec> canonical_basis(const std::vector<Vec>& vectors, std::size_t dim);

/// Unique solution of m x = b; std::nullopt when m is singular or the system
/// is inconsistent.
std::optional<Vec> solve_unique(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Incremental sparse elimination for affine systems sum_c a_c x_c + b = 0.
/// Used for large, very sparse ansatz systems where dense elimination wastes
/// most of its work on zeros.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  using Row = std::map<std::size_t, Rational>;

  /// Adds the equation sum_c row[c] x_c + constant = 0. Returns false once the
  /// system is known to be inconsistent.
  bool add_equation(Row row, Rational constant);

  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t unknowns() const { return unknowns_; }

  /// The solution when it exists and is unique.
  std::optional<Vec> unique_solution() const;

 private:
  struct Pivot {
    Row row;  // normalised so row[pivot] == 1
    Rational constant;
  };
  void reduce(Row& row, Rational& constant) const;

  std::size_t unknowns_;
  std::map<std::size_t, Pivot> pivots_;
  bool consistent_ = true;
};

}  // namespace walg
