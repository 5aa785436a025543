#pragma once

#include <cstddef>
#include <vector>

#include "instanton/field.hpp"
#include "instanton/matrix.hpp"

namespace instanton {

using Exponent = std::vector<unsigned>;

/// Degree-d monomials in nvars variables, ordered lexicographically with
/// x_0 > x_1 > ... (so x_0^d comes first).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned degree);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }

  std::size_t index_of(const Exponent& e) const;
  /// Index in the degree+1 basis of x_var times monomial i.
  std::size_t times_variable(std::size_t i, std::size_t var) const { return times_var_[i * nvars_ + var]; }

 private:
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Exponent> monomials_;
  std::vector<std::size_t> times_var_;
};

/// Shared, cached basis; safe to call from several threads.
const MonomialBasis& monomial_basis(std::size_t nvars, unsigned degree);

/// C(nvars-1+d, d); zero for negative d.
std::size_t monomial_count(std::size_t nvars, int degree);

struct HomogeneousForm {
  std::size_t nvars = 0;
  unsigned degree = 0;
  std::vector<Scalar> coeffs;

  static HomogeneousForm zero(std::size_t nvars, unsigned degree);
  /// The linear form x_var.
  static HomogeneousForm variable(std::size_t nvars, std::size_t var);
  static HomogeneousForm linear(std::vector<Scalar> coeffs);
  static HomogeneousForm random(const PrimeField& f, Rng& rng, std::size_t nvars, unsigned degree);

  bool is_zero() const;
  bool operator==(const HomogeneousForm& o) const = default;
};

HomogeneousForm add(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm sub(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm scale(const PrimeField& f, Scalar s, const HomogeneousForm& a);
HomogeneousForm multiply(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b);
Scalar evaluate(const PrimeField& f, const HomogeneousForm& a, std::span<const Scalar> point);

/// x = P y with P of shape ambient x fiber and full column rank.
struct SubspaceParam {
  Matrix P;

  std::size_t ambient_dim() const { return P.rows(); }
  std::size_t fiber_dim() const { return P.cols(); }
  /// Projective dimension.
  std::size_t dim() const { return P.cols() - 1; }

  /// Validates rank(P) = cols(P); throws RankDeficient otherwise.
  static SubspaceParam from_matrix(const PrimeField& f, Matrix P);
  /// Span of the given points (as columns).
  static SubspaceParam span(const PrimeField& f, const std::vector<Vector>& points);
  static SubspaceParam random(const PrimeField& f, Rng& rng, std::size_t ambient, std::size_t projective_dim);

  /// P y for a fiber coordinate vector y.
  Vector push_forward(const PrimeField& f, std::span<const Scalar> y) const;
};

/// Substitutes x := P y and re-expands in the subspace coordinates.
HomogeneousForm restrict(const PrimeField& f, const HomogeneousForm& a, const SubspaceParam& L);

/// Common zero set of linear forms. Throws RankDeficient if the forms are dependent.
SubspaceParam solve_subspace(const PrimeField& f, const std::vector<HomogeneousForm>& forms);

/// Coefficient rows of linear forms, one row per form.
Matrix linear_coefficients(const std::vector<HomogeneousForm>& forms, std::size_t nvars);

}  // namespace instanton
