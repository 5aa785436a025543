#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "instanton/field.hpp"
#include "instanton/rng.hpp"

namespace instanton {

/// Dense row-major matrix of residues. The field is supplied to every
/// arithmetic routine rather than stored, so matrices stay plain values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix random(const PrimeField& f, Rng& rng, std::size_t rows, std::size_t cols);
  /// Builds from small signed integers, reduced into the field.
  static Matrix from_ints(const PrimeField& f, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  std::vector<Scalar> column(std::size_t c) const;

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using Vector = std::vector<Scalar>;

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Vector multiply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix sub(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, Scalar s, const Matrix& a);
/// Kronecker product; entry ((i,k),(j,l)) = a(i,j) b(k,l).
Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b);
/// Columns of `a` selected by index, in the given order.
Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Row rank. The optional deadline is polled once per pivot.
std::size_t rank(const PrimeField& f, Matrix m, const Deadline* deadline = nullptr);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, Matrix& m, const Deadline* deadline = nullptr);

/// Basis of {v : M v = 0}, with cols - rank(M) vectors. Stacked as rows the
/// basis is in reduced echelon form: each vector has a leading 1 and the
/// leading positions are strictly increasing.
std::vector<Vector> kernel_basis(const PrimeField& f, const Matrix& m);

std::size_t kernel_dim(const PrimeField& f, const Matrix& m, const Deadline* deadline = nullptr);

Scalar determinant(const PrimeField& f, Matrix m);
/// Inverse of a square matrix; throws RankDeficient if singular.
Matrix inverse(const PrimeField& f, const Matrix& m);

/// Matrix whose rows are the given vectors.
Matrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols);

}  // namespace instanton
