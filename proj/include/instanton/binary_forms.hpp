#pragma once

#include "instanton/field.hpp"
#include "instanton/matrix.hpp"

namespace instanton {

// S^m U has basis u1^{m-i} u2^i, i = 0..m. A 2x2 matrix g acts on U by
// u_j -> sum_i g(i,j) u_i.

/// mu: S^p U (x) S^q U -> S^{p+q} U. Column i*(q+1)+j has a single 1 in row i+j.
Matrix mult_map(std::size_t p, std::size_t q);

/// Action of g on S^m U.
Matrix sym_power(const PrimeField& f, const Matrix& g, std::size_t m);

/// Derivation action of xi in gl_2 on S^m U (Leibniz rule).
Matrix sym_power_derivative(const PrimeField& f, const Matrix& xi, std::size_t m);

/// Whether mu restricted to ker(lambda) (x) S^q U still maps onto S^{p+q} U.
/// lambda has p+1 coordinates against the dual monomial basis. Throws
/// ZeroFunctional when lambda = 0.
bool hyperplane_mult_surjective(const PrimeField& f, const Vector& lambda, std::size_t q);

/// Evaluation at (a:b), i.e. the p-th power functional u1^{p-i}u2^i -> a^{p-i} b^i.
Vector power_functional(const PrimeField& f, Scalar a, Scalar b, std::size_t p);

}  // namespace instanton
