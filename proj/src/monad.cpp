#include "instanton/monad.hpp"

#include <algorithm>

#include "instanton/error.hpp"

namespace instanton {

LinearFormMatrix LinearFormMatrix::zero(std::size_t n, std::size_t k) { return zero(n, k, 2 * n + 2); }

LinearFormMatrix LinearFormMatrix::zero(std::size_t n, std::size_t k, std::size_t nvars) {
  LinearFormMatrix A;
  A.n = n;
  A.k = k;
  A.nvars = nvars;
  A.coeffs.assign(nvars, Matrix(k, 2 * n + 2 * k));
  return A;
}

HomogeneousForm LinearFormMatrix::entry(std::size_t i, std::size_t j) const {
  auto h = HomogeneousForm::zero(nvars, 1);
  for (std::size_t m = 0; m < nvars; ++m) h.coeffs[m] = coeffs[m](i, j);
  return h;
}

void LinearFormMatrix::set_entry(std::size_t i, std::size_t j, const HomogeneousForm& form) {
  if (form.degree != 1 || form.nvars != nvars) throw Error(ErrorCode::InvalidArgument, "entry must be a linear form");
  for (std::size_t m = 0; m < nvars; ++m) coeffs[m](i, j) = form.coeffs[m];
}

Matrix LinearFormMatrix::evaluate(const PrimeField& f, std::span<const Scalar> point) const {
  if (point.size() != nvars) throw Error(ErrorCode::InvalidArgument, "point length does not match nvars");
  Matrix out(rows(), cols());
  for (std::size_t m = 0; m < nvars; ++m) {
    if (point[m] == 0) continue;
    out = add(f, out, scale(f, point[m], coeffs[m]));
  }
  return out;
}

LinearFormMatrix LinearFormMatrix::restrict(const PrimeField& f, const SubspaceParam& L) const {
  if (L.ambient_dim() != nvars) throw Error(ErrorCode::InvalidArgument, "subspace ambient mismatch");
  LinearFormMatrix R = zero(n, k, L.fiber_dim());
  for (std::size_t m = 0; m < nvars; ++m)
    for (std::size_t r = 0; r < L.fiber_dim(); ++r) {
      Scalar c = L.P(m, r);
      if (c != 0) R.coeffs[r] = add(f, R.coeffs[r], scale(f, c, coeffs[m]));
    }
  return R;
}

Matrix symplectic_J(const PrimeField& f, std::size_t m) {
  Matrix J(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    J(i, m + i) = 1;
    J(m + i, i) = f.neg(1);
  }
  return J;
}

FormVector apply(const PrimeField& f, const LinearFormMatrix& A, const FormVector& v) {
  if (v.size() != A.cols()) throw Error(ErrorCode::InvalidArgument, "vector length does not match columns");
  unsigned d = v.empty() ? 0 : v.front().degree;
  FormVector out(A.rows(), HomogeneousForm::zero(A.nvars, d + 1));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (v[c].is_zero()) continue;
      out[i] = add(f, out[i], multiply(f, A.entry(i, c), v[c]));
    }
  return out;
}

Vector flatten(const FormVector& v) {
  Vector out;
  for (const auto& h : v) out.insert(out.end(), h.coeffs.begin(), h.coeffs.end());
  return out;
}

bool symplectic_check(const PrimeField& f, const LinearFormMatrix& A) {
  Matrix J = symplectic_J(f, A.n + A.k);
  std::vector<Matrix> AJ;
  for (const auto& Am : A.coeffs) AJ.push_back(multiply(f, Am, J));
  for (std::size_t m = 0; m < A.nvars; ++m) {
    for (std::size_t l = m; l < A.nvars; ++l) {
      // coefficient of x_m x_l in A J A^t
      Matrix c = multiply(f, AJ[m], A.coeffs[l].transpose());
      if (l != m) c = add(f, c, multiply(f, AJ[l], A.coeffs[m].transpose()));
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

std::vector<KroneckerEntry> kronecker_coefficients(const PrimeField& f, const LinearFormMatrix& A) {
  Matrix J = symplectic_J(f, A.n + A.k);
  std::vector<KroneckerEntry> out;
  for (std::size_t m = 0; m < A.nvars; ++m) {
    Matrix AJ = multiply(f, A.coeffs[m], J);
    for (std::size_t l = m + 1; l < A.nvars; ++l) out.push_back({m, l, multiply(f, AJ, A.coeffs[l].transpose())});
  }
  return out;
}

Matrix line_pairing(const PrimeField& f, const LinearFormMatrix& A, const Vector& P, const Vector& Q) {
  if (rank(f, rows_to_matrix({P, Q}, A.nvars)) < 2) {
    throw Error(ErrorCode::DegenerateLine, "points are proportional");
  }
  Matrix J = symplectic_J(f, A.n + A.k);
  return multiply(f, multiply(f, A.evaluate(f, P), J), A.evaluate(f, Q).transpose());
}

Matrix syzygy_matrix(const PrimeField& f, const LinearFormMatrix& A, unsigned d) {
  const auto& src = monomial_basis(A.nvars, d);
  const std::size_t dim_src = src.size();
  const std::size_t dim_dst = monomial_count(A.nvars, static_cast<int>(d) + 1);
  Matrix M(A.rows() * dim_dst, A.cols() * dim_src);
  for (std::size_t m = 0; m < A.nvars; ++m) {
    const Matrix& Am = A.coeffs[m];
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t c = 0; c < A.cols(); ++c) {
        Scalar a = Am(i, c);
        if (a == 0) continue;
        for (std::size_t s = 0; s < dim_src; ++s) {
          std::size_t r = i * dim_dst + src.times_variable(s, m);
          std::size_t col = c * dim_src + s;
          M(r, col) = f.add(M(r, col), a);
        }
      }
  }
  return M;
}

std::size_t syzygy_dim(const PrimeField& f, const LinearFormMatrix& A, unsigned d, const Deadline* deadline) {
  return kernel_dim(f, syzygy_matrix(f, A, d), deadline);
}

std::vector<FormVector> syzygy_basis(const PrimeField& f, const LinearFormMatrix& A, unsigned d) {
  const std::size_t dim = monomial_count(A.nvars, static_cast<int>(d));
  std::vector<FormVector> out;
  for (const auto& v : kernel_basis(f, syzygy_matrix(f, A, d))) {
    FormVector fv;
    for (std::size_t c = 0; c < A.cols(); ++c) {
      auto h = HomogeneousForm::zero(A.nvars, d);
      std::copy(v.begin() + c * dim, v.begin() + (c + 1) * dim, h.coeffs.begin());
      fv.push_back(std::move(h));
    }
    out.push_back(std::move(fv));
  }
  return out;
}

const char* to_string(EvidenceMode mode) {
  switch (mode) {
    case EvidenceMode::Certificate: return "certificate";
    case EvidenceMode::Sampled: return "sampled";
    case EvidenceMode::Disproved: return "disproved";
  }
  return "unknown";
}

Vector random_point(const PrimeField& f, Rng& rng, std::size_t dim) {
  for (;;) {
    Vector v(dim);
    bool nonzero = false;
    for (auto& x : v) {
      x = rng.scalar(f);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) return v;
  }
}

std::size_t rank_at_point(const PrimeField& f, const LinearFormMatrix& A, const Vector& x) {
  return rank(f, A.evaluate(f, x));
}

RankEvidence sample_rank_evidence(const PrimeField& f, const LinearFormMatrix& A, int trials, std::uint64_t seed,
                                  const SubspaceParam* on) {
  Rng rng(seed);
  RankEvidence ev;
  ev.trials = trials;
  ev.seed = seed;
  ev.min_rank = A.rows();
  for (int t = 0; t < trials; ++t) {
    Vector x = on ? on->push_forward(f, random_point(f, rng, on->fiber_dim())) : random_point(f, rng, A.nvars);
    if (std::all_of(x.begin(), x.end(), [](Scalar s) { return s == 0; })) continue;
    std::size_t r = rank_at_point(f, A, x);
    if (r < ev.min_rank) {
      ev.min_rank = r;
      if (!ev.failing_point) ev.failing_point = x;
    }
  }
  ev.mode = ev.min_rank < A.rows() ? EvidenceMode::Disproved : EvidenceMode::Sampled;
  return ev;
}

MonadPresentation make_presentation(const PrimeField& f, LinearFormMatrix A, int trials, std::uint64_t seed) {
  MonadPresentation M;
  M.symplectic_verified = symplectic_check(f, A);
  M.rank_evidence = sample_rank_evidence(f, A, trials, seed);
  M.A = std::move(A);
  return M;
}

std::size_t h0_twist(const PrimeField& f, const MonadPresentation& M, unsigned d) {
  if (!M.symplectic_verified) throw Error(ErrorCode::InvalidArgument, "A J A^t = 0 has not been verified");
  if (M.rank_evidence.mode == EvidenceMode::Disproved) {
    throw Error(ErrorCode::InvalidArgument, "A drops rank at a sampled point");
  }
  long long syz = static_cast<long long>(syzygy_dim(f, M.A, d));
  long long forced = static_cast<long long>(M.A.rows() * monomial_count(M.A.nvars, static_cast<int>(d) - 1));
  if (syz < forced) throw Error(ErrorCode::NegativeResult, "syzygy space smaller than the forced sections");
  return static_cast<std::size_t>(syz - forced);
}

namespace {

void check_rank_on(const PrimeField& f, const LinearFormMatrix& restricted, std::uint64_t seed, int samples) {
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vector y = random_point(f, rng, restricted.nvars);
    if (rank_at_point(f, restricted, y) < restricted.rows()) {
      throw Error(ErrorCode::RankDropOnSubspace, "A has rank < k at a sampled point of the subspace");
    }
  }
}

}  // namespace

std::size_t h0_restricted(const PrimeField& f, const LinearFormMatrix& A, const SubspaceParam& L, std::uint64_t seed,
                          int samples) {
  if (L.dim() < 1) throw Error(ErrorCode::InvalidArgument, "subspace must have positive dimension");
  LinearFormMatrix R = A.restrict(f, L);
  check_rank_on(f, R, seed, samples);
  return syzygy_dim(f, R, 0);
}

int SplittingType::positive_sum() const {
  int s = 0;
  for (int a : degrees)
    if (a > 0) s += a;
  return s;
}

bool SplittingType::trivial() const {
  return std::all_of(degrees.begin(), degrees.end(), [](int a) { return a == 0; });
}

SplittingData splitting_on_line(const PrimeField& f, const LinearFormMatrix& A, const Vector& P, const Vector& Q,
                                std::uint64_t seed) {
  if (rank(f, rows_to_matrix({P, Q}, A.nvars)) < 2) {
    throw Error(ErrorCode::DegenerateLine, "points are proportional");
  }
  SubspaceParam line{rows_to_matrix({P, Q}, A.nvars).transpose()};
  LinearFormMatrix R = A.restrict(f, line);
  check_rank_on(f, R, seed, 3);

  const std::size_t k = A.k;
  const long long rank_e = static_cast<long long>(2 * A.n);
  SplittingData out;
  for (std::size_t m = 0; m <= k + 1; ++m) {
    long long h = static_cast<long long>(syzygy_dim(f, R, static_cast<unsigned>(m))) - static_cast<long long>(k * m);
    if (h < 0) throw Error(ErrorCode::NegativeResult, "restricted syzygy count below forced sections");
    out.h0.push_back(static_cast<std::size_t>(h));
  }
  // c(m) = #{a_i <= m} for m >= 1 by self-duality.
  std::vector<long long> c(k + 2, 0);
  for (std::size_t m = 1; m <= k + 1; ++m) c[m] = static_cast<long long>(out.h0[m]) - static_cast<long long>(out.h0[m - 1]);
  if (c[k + 1] != rank_e) throw Error(ErrorCode::NegativeResult, "splitting degrees exceed the surveyed range");

  std::vector<long long> N(k + 2, 0);
  long long above_one = 0, weighted = 0, excess = 0;
  for (std::size_t j = 2; j <= k + 1; ++j) {
    N[j] = c[j] - c[j - 1];
    if (N[j] < 0) throw Error(ErrorCode::NegativeResult, "inconsistent section counts on the line");
    above_one += N[j];
    weighted += static_cast<long long>(j) * N[j];
    excess += static_cast<long long>(j - 1) * N[j];
  }

  // Sections of O(a) (x) <s,t> -> O(a+1) have an a-dimensional kernel for a >= 0.
  auto syz0 = kernel_basis(f, syzygy_matrix(f, R, 0));
  Matrix J = symplectic_J(f, A.n + A.k);
  const std::size_t width = A.cols() * 2;
  std::vector<Vector> forced;
  for (std::size_t i = 0; i < k; ++i) {
    Vector col(width, 0);
    for (std::size_t r = 0; r < A.cols(); ++r)
      for (std::size_t d = 0; d < A.cols(); ++d) {
        if (J(r, d) == 0) continue;
        for (std::size_t v = 0; v < 2; ++v)
          col[r * 2 + v] = f.add(col[r * 2 + v], f.mul(J(r, d), R.coeffs[v](i, d)));
      }
    forced.push_back(std::move(col));
  }
  std::vector<Vector> image = forced;
  for (const auto& s : syz0)
    for (std::size_t v = 0; v < 2; ++v) {
      Vector col(width, 0);
      for (std::size_t r = 0; r < A.cols(); ++r) col[r * 2 + v] = s[r];
      image.push_back(std::move(col));
    }
  std::size_t forced_rank = rank(f, rows_to_matrix(forced, width));
  std::size_t total_rank = rank(f, rows_to_matrix(image, width));
  out.mult_kernel = 2 * syz0.size() - (total_rank - forced_rank);

  long long n1 = static_cast<long long>(out.mult_kernel) - weighted;
  long long n0 = rank_e - 2 * (n1 + above_one);
  if (n1 < 0 || n0 < 0 || static_cast<long long>(out.h0[0]) - rank_e != excess) {
    throw Error(ErrorCode::NegativeResult, "section counts do not fit a self-dual splitting");
  }
  N[1] = n1;
  for (std::size_t j = k + 1; j >= 1; --j)
    for (long long t = 0; t < N[j]; ++t) out.type.degrees.push_back(static_cast<int>(j));
  for (long long t = 0; t < n0; ++t) out.type.degrees.push_back(0);
  for (std::size_t j = 1; j <= k + 1; ++j)
    for (long long t = 0; t < N[j]; ++t) out.type.degrees.push_back(-static_cast<int>(j));
  return out;
}

SplittingType splitting_type_on_line(const PrimeField& f, const LinearFormMatrix& A, const Vector& P, const Vector& Q,
                                     std::uint64_t seed) {
  return splitting_on_line(f, A, P, Q, seed).type;
}

}  // namespace instanton
