#pragma once

#include <cstdint>
#include <vector>

#include "instanton/monad.hpp"

namespace instanton {

/// A = a (D | D') with D = diag(l_1..l_{n+k}), D' = diag(l'_1..l'_{n+k}).
struct ThooftDatum {
  std::size_t n = 0;
  std::size_t k = 0;
  Matrix a;                            // k x (n+k)
  std::vector<HomogeneousForm> l;      // n+k linear forms in 2n+2 variables
  std::vector<HomogeneousForm> lprime;

  std::size_t nvars() const { return 2 * n + 2; }
  bool operator==(const ThooftDatum& o) const = default;
};

/// (sigma, (beta_j, gamma_j), alpha) acting by
/// (g a)_j = alpha^{-1} gamma_j a_{sigma(j)},  (g L)_j = gamma_j^{-1} beta_j L_{sigma(j)}.
struct ThooftGroupElement {
  Matrix alpha;                 // k x k invertible
  std::vector<Matrix> beta;     // 2 x 2, det 1
  std::vector<Scalar> gamma;    // nonzero
  std::vector<std::size_t> sigma;

  static ThooftGroupElement identity(const PrimeField& f, std::size_t n, std::size_t k);
  static ThooftGroupElement random(const PrimeField& f, Rng& rng, std::size_t n, std::size_t k);
  /// alpha = -I, beta_j = -I, gamma_j = -1.
  static ThooftGroupElement minus_one(const PrimeField& f, std::size_t n, std::size_t k);
};

std::size_t thooft_parameter_dim(std::size_t n, std::size_t k);
std::size_t thooft_group_dim(std::size_t n, std::size_t k);

LinearFormMatrix build_thooft(const PrimeField& f, const ThooftDatum& d);

/// Columns of J (D|D')^t: vector j has l'_j in slot j and -l_j in slot n+k+j.
std::vector<FormVector> canonical_syzygies(const PrimeField& f, const ThooftDatum& d);

/// Vandermonde a and moment-curve forms l_j in span(x), l'_j in span(y).
/// Throws FieldTooSmall if n+k distinct nonzero nodes are unavailable.
ThooftDatum proof_witness_general(const PrimeField& f, std::size_t n, std::size_t k);

/// Vandermonde a with the repeated coordinate pattern
///   l  = (x_0, .., x_{n-1}, x_{n-1}, x_n, .., x_n)
///   l' = (y_0, .., y_n, y_{n-1}, y_n, .., y_n).
/// Requires k >= 3.
ThooftDatum proof_witness_syz(const PrimeField& f, std::size_t n, std::size_t k);

/// For l in span(x) and l' in span(y), degree-1 syzygies split into the
/// Sym^2 V, Sym^2 W and V (x) W parts. Returns the dimension of the V (x) W
/// part: solutions (c, b') of a (D c + D' b') = 0 with c in W^{n+k} placed in
/// the first n+k slots and b' in V^{n+k} in the last n+k.
std::size_t syzygy_dim_mixed_block(const PrimeField& f, const ThooftDatum& d);

/// Uniform entries, redrawn (at most 32 times) until the datum passes a
/// genericity screen: nonzero k x k minors of a, torus stability,
/// independent pairs (l_j, l'_j), and no rank drop among sampled points.
/// Throws RetryLimit.
ThooftDatum random_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed);

/// l_j in a random (n+1)-space V and l'_j in a random complement W, redrawn
/// until fullrank_certificate holds. Throws RetryLimit.
ThooftDatum random_structured_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed);

/// Nonvanishing k x k minors of a, and l (resp. l') in complementary
/// (n+1)-spaces with every n+1 of them independent. Implies A has rank k
/// everywhere.
bool fullrank_certificate(const PrimeField& f, const ThooftDatum& d);

/// Presentation whose rank evidence is a certificate when one is available.
MonadPresentation thooft_presentation(const PrimeField& f, const ThooftDatum& d, int trials, std::uint64_t seed);

/// Linear system on X in Mat_{k x (2n+2k)}(S_1) expressing that A J X^t is symmetric.
Matrix deformation_system(const PrimeField& f, const LinearFormMatrix& A);
std::size_t deformation_space_dim(const PrimeField& f, const LinearFormMatrix& A, const Deadline* deadline = nullptr);

ThooftDatum apply_group(const PrimeField& f, const ThooftGroupElement& g, const ThooftDatum& d);

/// Rank of the infinitesimal action (delta alpha, delta beta_j, delta gamma_j)
/// at d, as a map into the parameter space.
std::size_t orbit_rank(const PrimeField& f, const ThooftDatum& d);

/// Every column a_j nonzero and no pair (l_j, l'_j) identically zero.
bool torus_stable(const ThooftDatum& d);

/// a, l, l' flattened in that order.
Vector flatten(const ThooftDatum& d);

bool all_minors_nonzero(const PrimeField& f, const Matrix& a);

}  // namespace instanton
