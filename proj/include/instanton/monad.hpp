#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "instanton/field.hpp"
#include "instanton/matrix.hpp"
#include "instanton/poly.hpp"

namespace instanton {

/// k x (2n+2k) matrix of linear forms stored as coefficient slices:
/// A = sum_m coeffs[m] * x_m. nvars is 2n+2 for a monad on P^{2n+1} and
/// smaller after restriction to a subspace.
struct LinearFormMatrix {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t nvars = 0;
  std::vector<Matrix> coeffs;

  static LinearFormMatrix zero(std::size_t n, std::size_t k);
  static LinearFormMatrix zero(std::size_t n, std::size_t k, std::size_t nvars);

  std::size_t rows() const { return k; }
  std::size_t cols() const { return 2 * n + 2 * k; }

  HomogeneousForm entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const HomogeneousForm& form);

  /// Scalar matrix A(x).
  Matrix evaluate(const PrimeField& f, std::span<const Scalar> point) const;
  LinearFormMatrix restrict(const PrimeField& f, const SubspaceParam& L) const;

  bool operator==(const LinearFormMatrix& o) const = default;
};

/// Standard symplectic form ((0, I), (-I, 0)) of size 2m.
Matrix symplectic_J(const PrimeField& f, std::size_t m);

/// Column vector of forms, all of one degree.
using FormVector = std::vector<HomogeneousForm>;

/// A v, a vector of k forms of degree deg(v)+1.
FormVector apply(const PrimeField& f, const LinearFormMatrix& A, const FormVector& v);

/// Flattened coefficients of a form vector, entry-major.
Vector flatten(const FormVector& v);

/// True iff every entry of A J A^t vanishes coefficientwise.
bool symplectic_check(const PrimeField& f, const LinearFormMatrix& A);

struct KroneckerEntry {
  std::size_t m;
  std::size_t l;
  Matrix K;  // A_m J A_l^t
};

/// Pairings A_m J A_l^t for m < l.
std::vector<KroneckerEntry> kronecker_coefficients(const PrimeField& f, const LinearFormMatrix& A);

/// A(P) J A(Q)^t. Throws DegenerateLine if P and Q are proportional.
Matrix line_pairing(const PrimeField& f, const LinearFormMatrix& A, const Vector& P, const Vector& Q);

/// Coefficient matrix of v -> A v on (S_d)^{cols}, with k * dim S_{d+1} rows.
Matrix syzygy_matrix(const PrimeField& f, const LinearFormMatrix& A, unsigned d);
std::size_t syzygy_dim(const PrimeField& f, const LinearFormMatrix& A, unsigned d,
                       const Deadline* deadline = nullptr);
std::vector<FormVector> syzygy_basis(const PrimeField& f, const LinearFormMatrix& A, unsigned d);

enum class EvidenceMode { Certificate, Sampled, Disproved };
const char* to_string(EvidenceMode mode);

struct RankEvidence {
  EvidenceMode mode = EvidenceMode::Sampled;
  int trials = 0;
  std::uint64_t seed = 0;
  std::size_t min_rank = 0;
  std::optional<Vector> failing_point;
};

std::size_t rank_at_point(const PrimeField& f, const LinearFormMatrix& A, const Vector& x);

/// Draws `trials` nonzero points (of `on` if given, else of the ambient
/// space) and records the smallest rank of A seen.
RankEvidence sample_rank_evidence(const PrimeField& f, const LinearFormMatrix& A, int trials, std::uint64_t seed,
                                  const SubspaceParam* on = nullptr);

struct MonadPresentation {
  LinearFormMatrix A;
  bool symplectic_verified = false;
  RankEvidence rank_evidence;
};

MonadPresentation make_presentation(const PrimeField& f, LinearFormMatrix A, int trials, std::uint64_t seed);

/// syz_d(A) - k dim S_{d-1}; h^0(E(d)) for a valid monad. Requires a verified
/// symplectic presentation whose rank evidence is not disproved; throws
/// NegativeResult if the count goes below zero.
std::size_t h0_twist(const PrimeField& f, const MonadPresentation& M, unsigned d);

/// Degree-0 relations among the columns of A restricted to L. Throws
/// RankDropOnSubspace if A has rank < k at one of `samples` points of L.
std::size_t h0_restricted(const PrimeField& f, const LinearFormMatrix& A, const SubspaceParam& L,
                          std::uint64_t seed = 1, int samples = 3);

struct SplittingType {
  std::vector<int> degrees;  // sorted descending

  int positive_sum() const;
  bool trivial() const;
};

struct SplittingData {
  SplittingType type;
  std::vector<std::size_t> h0;  // h^0(E|line(m)), m = 0..k+1
  std::size_t mult_kernel = 0;  // kernel of H^0(E|line) (x) H^0(O(1)) -> H^0(E|line(1))
};

/// Splitting of E on the line through P and Q, from restricted syzygy counts
/// and the multiplication map on sections. Throws RankDropOnSubspace.
SplittingData splitting_on_line(const PrimeField& f, const LinearFormMatrix& A, const Vector& P, const Vector& Q,
                                std::uint64_t seed = 1);
SplittingType splitting_type_on_line(const PrimeField& f, const LinearFormMatrix& A, const Vector& P,
                                     const Vector& Q, std::uint64_t seed = 1);

Vector random_point(const PrimeField& f, Rng& rng, std::size_t dim);

}  // namespace instanton
