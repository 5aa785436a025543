#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "instanton/monad.hpp"

namespace instanton {

/// A = (F | H) with banded F(i,j) = f_{j-i} and persymmetric H(i,j) = h_{i+j}.
struct RSDatum {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<HomogeneousForm> f;  // n+1 linear forms
  std::vector<HomogeneousForm> h;  // n+2k-1 linear forms

  std::size_t nvars() const { return 2 * n + 2; }
  bool operator==(const RSDatum& o) const = default;
};

/// (g, t, u) in (GL_2 x G_m) x (S^{2n+2k-2} U)^*.
struct RSGroupElement {
  Matrix g;  // 2 x 2
  Scalar t = 1;
  Vector u;  // 2n+2k-1 coordinates

  static RSGroupElement identity(std::size_t n, std::size_t k);
  static RSGroupElement random(const PrimeField& f, Rng& rng, std::size_t n, std::size_t k);
};

using FormMatrix = std::vector<std::vector<HomogeneousForm>>;

std::size_t rs_parameter_dim(std::size_t n, std::size_t k);
std::size_t rs_group_dim(std::size_t n, std::size_t k);

/// k x (n+k) matrix with entry (i,j) = h_{i+j}.
FormMatrix persymmetric_from_generators(const std::vector<HomogeneousForm>& h, std::size_t n, std::size_t k);

/// Throws DependentF if f_0..f_n are dependent.
LinearFormMatrix build_rs(const PrimeField& f, const RSDatum& d);

/// Coefficient matrices: column s of f_matrix is f_s, column m of h_matrix is h_m.
Matrix f_matrix(const RSDatum& d);
Matrix h_matrix(const RSDatum& d);

/// H block obtained by composing h with the multiplication
/// S^{k-1} (x) S^{n+k-1} -> S^{n+2k-2}; column i*(n+k)+j holds the coefficients of entry (i,j).
Matrix h_block_from_mult_map(const PrimeField& f, const RSDatum& d);
/// The H block of build_rs laid out the same way.
Matrix h_block_coefficients(const LinearFormMatrix& A);

/// f_s = x_s; h_0 = h_{n+2k-2} = eps*y_1, h_{k-1+m} = y_m for m = 0..n, other h zero.
RSDatum epsilon_datum(const PrimeField& f, std::size_t n, std::size_t k, Scalar eps);

/// The k syzygies v_1..v_k of the epsilon family.
std::vector<FormVector> expected_syzygy_basis(const PrimeField& f, std::size_t n, std::size_t k, Scalar eps);

/// Random independent f and uniform h. Throws RetryLimit.
RSDatum random_rs_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed);

/// {f_0 = .. = f_n = 0}. Throws DependentF.
SubspaceParam distinguished_subspace(const PrimeField& f, const RSDatum& d);

struct InstabilityResult {
  std::size_t distinguished = 0;
  int trials = 0;
  std::vector<std::size_t> other_values;  // random n-dim subspaces
  std::vector<Matrix> counterexamples;    // subspaces reaching n+k
  struct Bounded {
    std::size_t r;
    std::size_t value;
  };
  std::vector<Bounded> bound_values;      // random r-dim subspaces
  std::vector<Matrix> bound_violations;
  int rank_drop_events = 0;

  bool passed(std::size_t n, std::size_t k) const;
};

/// h0 on L equals n+k, sampled n-planes stay below n+k and sampled r-planes
/// obey h0 <= 2n+k-r. Rank drops are recorded, not fatal.
InstabilityResult max_instability_check(const PrimeField& f, const RSDatum& d, int trials, std::uint64_t seed);

/// n = 1 only (else NotALine): the k x k minors of H on the line L have no
/// common zero. Together with the banded F this shows A has rank k everywhere.
bool line_minor_certificate_n1(const PrimeField& f, const RSDatum& d);

MonadPresentation rs_presentation(const PrimeField& f, const RSDatum& d, int trials, std::uint64_t seed);

/// f' = t f (S^n g)^*,  h' = t (h - (u (x) f) mu_*) S^{n+2k-2}(g^{-1}).
RSDatum apply_group(const PrimeField& f, const RSGroupElement& g, const RSDatum& d);

/// (rho I, rho^{-n}, 0) for rho of exact order n+k-1; needs (n+k-1) | p-1.
RSGroupElement root_of_unity_element(const PrimeField& f, std::size_t n, std::size_t k);

/// Rank of the infinitesimal action (delta g, delta t, delta u) at d.
std::size_t orbit_rank(const PrimeField& f, const RSDatum& d);

Vector flatten(const RSDatum& d);

/// Univariate polynomial gcd over the field, coefficients lowest degree first.
/// The result is monic (or empty for the zero polynomial).
Vector poly_gcd(const PrimeField& f, Vector a, Vector b);

}  // namespace instanton
