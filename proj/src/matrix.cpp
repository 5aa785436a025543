#include "instanton/matrix.hpp"

#include <algorithm>
#include <utility>

#include "instanton/error.hpp"

namespace instanton {

void Deadline::check() const {
  if (expired()) throw Error(ErrorCode::TimeBudgetExceeded, "time budget exceeded");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidArgument, "matrix data length does not match shape");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::random(const PrimeField& f, Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& x : m.data_) x = rng.scalar(f);
  return m;
}

Matrix Matrix::from_ints(const PrimeField& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      Scalar x = a(i, t);
      if (x == 0) continue;
      auto brow = b.row(t);
      auto crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] = f.add(crow[j], f.mul(x, brow[j]));
    }
  }
  return c;
}

Vector multiply(const PrimeField& f, const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in matrix-vector product");
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += static_cast<std::uint64_t>(r[j]) * v[j] % f.modulus();
    }
    out[i] = static_cast<Scalar>(acc % f.modulus());
  }
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix sub(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "shape mismatch in sub");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(const PrimeField& f, Scalar s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  return c;
}

Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return c;
}

Matrix select_columns(const Matrix& a, std::span<const std::size_t> cols) {
  Matrix c(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(i, j) = a(i, cols[j]);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "row mismatch in hstack");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "column mismatch in vstack");
  std::vector<Scalar> data(a.data());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix(a.rows() + b.rows(), a.cols(), std::move(data));
}

namespace {

// row[j] -= factor * pivot[j] for j >= from.
void eliminate_row(const PrimeField& f, std::span<Scalar> row, std::span<const Scalar> pivot, Scalar factor,
                   std::size_t from) {
  const std::uint64_t p = f.modulus();
  const std::uint64_t negf = p - factor;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (pivot[j] == 0) continue;
    row[j] = static_cast<Scalar>((row[j] + negf * pivot[j]) % p);
  }
}

}  // namespace

std::size_t rank(const PrimeField& f, Matrix m, const Deadline* deadline) {
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    if (deadline) deadline->check();
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
    }
    Scalar inv = f.inv(m(r, c));
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Scalar x = m(i, c);
      if (x != 0) eliminate_row(f, m.row(i), prow, x, c);
    }
    ++r;
  }
  return r;
}

std::vector<std::size_t> rref(const PrimeField& f, Matrix& m, const Deadline* deadline) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    if (deadline) deadline->check();
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Scalar inv = f.inv(m(r, c));
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar x = m(i, c);
      if (x != 0) eliminate_row(f, m.row(i), prow, x, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Vector> kernel_basis(const PrimeField& f, const Matrix& m) {
  Matrix reduced = m;
  auto pivots = rref(f, reduced, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  // Put the spanning set itself into reduced echelon form.
  Matrix stacked = rows_to_matrix(basis, m.cols());
  rref(f, stacked, nullptr);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto r = stacked.row(i);
    basis[i].assign(r.begin(), r.end());
  }
  return basis;
}

std::size_t kernel_dim(const PrimeField& f, const Matrix& m, const Deadline* deadline) {
  return m.cols() - rank(f, m, deadline);
}

Scalar determinant(const PrimeField& f, Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      auto a = m.row(piv);
      auto b = m.row(c);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Scalar inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar x = m(i, c);
      if (x != 0) eliminate_row(f, m.row(i), m.row(c), f.mul(x, inv), c);
    }
  }
  return det;
}

Matrix inverse(const PrimeField& f, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug = hstack(m, Matrix::identity(n));
  auto pivots = rref(f, aug, nullptr);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::RankDeficient, "matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace instanton
