#include "instanton/binary_forms.hpp"

#include "instanton/error.hpp"

namespace instanton {

Matrix mult_map(std::size_t p, std::size_t q) {
  Matrix m(p + q + 1, (p + 1) * (q + 1));
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; j <= q; ++j) m(i + j, i * (q + 1) + j) = 1;
  return m;
}

namespace {

// Coefficients of a binary form in the u1^{m-i}u2^i basis.
using Binary = std::vector<Scalar>;

Binary times(const PrimeField& f, const Binary& a, const Binary& b) {
  Binary c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return c;
}

void check_2x2(const Matrix& g) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorCode::InvalidArgument, "expected a 2x2 matrix");
}

}  // namespace

Matrix sym_power(const PrimeField& f, const Matrix& g, std::size_t m) {
  check_2x2(g);
  const Binary img1{g(0, 0), g(1, 0)};  // image of u1
  const Binary img2{g(0, 1), g(1, 1)};  // image of u2
  std::vector<Binary> pow1{Binary{1}}, pow2{Binary{1}};
  for (std::size_t e = 1; e <= m; ++e) {
    pow1.push_back(times(f, pow1.back(), img1));
    pow2.push_back(times(f, pow2.back(), img2));
  }
  Matrix s(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Binary col = times(f, pow1[m - i], pow2[i]);
    for (std::size_t r = 0; r <= m; ++r) s(r, i) = col[r];
  }
  return s;
}

Matrix sym_power_derivative(const PrimeField& f, const Matrix& xi, std::size_t m) {
  check_2x2(xi);
  Matrix d(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Scalar a = f.from_int(static_cast<long long>(m - i));
    Scalar b = f.from_int(static_cast<long long>(i));
    d(i, i) = f.add(f.mul(a, xi(0, 0)), f.mul(b, xi(1, 1)));
    if (i + 1 <= m) d(i + 1, i) = f.mul(a, xi(1, 0));
    if (i >= 1) d(i - 1, i) = f.mul(b, xi(0, 1));
  }
  return d;
}

bool hyperplane_mult_surjective(const PrimeField& f, const Vector& lambda, std::size_t q) {
  bool nonzero = false;
  for (auto x : lambda) nonzero = nonzero || x != 0;
  if (!nonzero) throw Error(ErrorCode::ZeroFunctional, "functional is zero");
  const std::size_t p = lambda.size() - 1;
  Matrix row(1, p + 1, lambda);
  auto kernel = kernel_basis(f, row);
  Matrix K = rows_to_matrix(kernel, p + 1).transpose();  // (p+1) x p
  Matrix restricted = multiply(f, mult_map(p, q), kronecker(f, K, Matrix::identity(q + 1)));
  return rank(f, restricted) == p + q + 1;
}

Vector power_functional(const PrimeField& f, Scalar a, Scalar b, std::size_t p) {
  Vector v(p + 1);
  for (std::size_t i = 0; i <= p; ++i) v[i] = f.mul(f.pow(a, p - i), f.pow(b, i));
  return v;
}

}  // namespace instanton
