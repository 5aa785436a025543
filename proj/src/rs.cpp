#include "instanton/rs.hpp"

#include "instanton/binary_forms.hpp"
#include "instanton/error.hpp"

namespace instanton {

namespace {

void check_shape(const RSDatum& d) {
  if (d.n < 1 || d.k < 1 || d.f.size() != d.n + 1 || d.h.size() != d.n + 2 * d.k - 1) {
    throw Error(ErrorCode::InvalidArgument, "RS datum has inconsistent shape");
  }
  for (const auto* forms : {&d.f, &d.h})
    for (const auto& h : *forms)
      if (h.degree != 1 || h.nvars != d.nvars()) {
        throw Error(ErrorCode::InvalidArgument, "RS forms must be linear in 2n+2 variables");
      }
}

void check_independent(const PrimeField& f, const RSDatum& d) {
  if (rank(f, linear_coefficients(d.f, d.nvars())) != d.n + 1) {
    throw Error(ErrorCode::DependentF, "f_0..f_n are linearly dependent");
  }
}

Matrix columns_of(const std::vector<HomogeneousForm>& forms, std::size_t nvars) {
  return linear_coefficients(forms, nvars).transpose();
}

std::vector<HomogeneousForm> forms_of(const Matrix& cols) {
  std::vector<HomogeneousForm> out;
  for (std::size_t c = 0; c < cols.cols(); ++c) out.push_back(HomogeneousForm::linear(cols.column(c)));
  return out;
}

// Column m is sum_i u_{i+m} f_i, m = 0..n+2k-2.
Matrix contraction(const PrimeField& f, const Matrix& F, const Vector& u, std::size_t hlen) {
  Matrix C(F.rows(), hlen);
  for (std::size_t m = 0; m < hlen; ++m)
    for (std::size_t i = 0; i < F.cols(); ++i) {
      Scalar c = u[i + m];
      if (c == 0) continue;
      for (std::size_t r = 0; r < F.rows(); ++r) C(r, m) = f.add(C(r, m), f.mul(c, F(r, i)));
    }
  return C;
}

}  // namespace

std::size_t rs_parameter_dim(std::size_t n, std::size_t k) { return (2 * n + 2 * k) * (2 * n + 2); }

std::size_t rs_group_dim(std::size_t n, std::size_t k) { return 2 * n + 2 * k + 4; }

FormMatrix persymmetric_from_generators(const std::vector<HomogeneousForm>& h, std::size_t n, std::size_t k) {
  if (h.size() != n + 2 * k - 1) throw Error(ErrorCode::InvalidArgument, "need n+2k-1 generators");
  FormMatrix H(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n + k; ++j) H[i].push_back(h[i + j]);
  return H;
}

LinearFormMatrix build_rs(const PrimeField& f, const RSDatum& d) {
  check_shape(d);
  check_independent(f, d);
  const std::size_t m = d.n + d.k;
  LinearFormMatrix A = LinearFormMatrix::zero(d.n, d.k);
  for (std::size_t i = 0; i < d.k; ++i) {
    for (std::size_t s = 0; s <= d.n; ++s) A.set_entry(i, i + s, d.f[s]);
    for (std::size_t j = 0; j < m; ++j) A.set_entry(i, m + j, d.h[i + j]);
  }
  return A;
}

Matrix f_matrix(const RSDatum& d) { return columns_of(d.f, d.nvars()); }

Matrix h_matrix(const RSDatum& d) { return columns_of(d.h, d.nvars()); }

Matrix h_block_from_mult_map(const PrimeField& f, const RSDatum& d) {
  check_shape(d);
  return multiply(f, h_matrix(d), mult_map(d.k - 1, d.n + d.k - 1));
}

Matrix h_block_coefficients(const LinearFormMatrix& A) {
  const std::size_t m = A.n + A.k;
  Matrix out(A.nvars, A.k * m);
  for (std::size_t v = 0; v < A.nvars; ++v)
    for (std::size_t i = 0; i < A.k; ++i)
      for (std::size_t j = 0; j < m; ++j) out(v, i * m + j) = A.coeffs[v](i, m + j);
  return out;
}

RSDatum epsilon_datum(const PrimeField& f, std::size_t n, std::size_t k, Scalar eps) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  const std::size_t N = 2 * n + 2;
  RSDatum d{n, k, {}, std::vector<HomogeneousForm>(n + 2 * k - 1, HomogeneousForm::zero(N, 1))};
  for (std::size_t s = 0; s <= n; ++s) d.f.push_back(HomogeneousForm::variable(N, s));
  auto y = [&](std::size_t i) { return HomogeneousForm::variable(N, n + 1 + i); };
  for (std::size_t m = 0; m <= n; ++m) d.h[k - 1 + m] = y(m);
  // With k = 1 the two eps*y_1 slots coincide with the y-run; add rather than overwrite.
  d.h.front() = add(f, d.h.front(), scale(f, eps, y(1)));
  if (d.h.size() > 1) d.h.back() = add(f, d.h.back(), scale(f, eps, y(1)));
  return d;
}

std::vector<FormVector> expected_syzygy_basis(const PrimeField& f, std::size_t n, std::size_t k, Scalar eps) {
  if (n < 1 || k < 2) throw Error(ErrorCode::InvalidArgument, "the printed basis needs n >= 1 and k >= 2");
  const std::size_t N = 2 * n + 2, m = n + k;
  auto x = [&](std::size_t i) { return HomogeneousForm::variable(N, i); };
  auto neg_y = [&](std::size_t i) { return scale(f, f.neg(1), HomogeneousForm::variable(N, n + 1 + i)); };
  const auto neg_eps_y1 = scale(f, f.neg(eps), HomogeneousForm::variable(N, n + 2));

  std::vector<FormVector> out;
  for (std::size_t i = 1; i <= k; ++i) {
    FormVector v(2 * m, HomogeneousForm::zero(N, 1));
    if (i == 1) {
      v[0] = neg_eps_y1;
      for (std::size_t s = 0; s <= n; ++s) v[k - 1 + s] = neg_y(s);
    } else if (i == k) {
      for (std::size_t s = 0; s <= n; ++s) v[s] = neg_y(s);
      v[m - 1] = neg_eps_y1;
    } else {
      for (std::size_t s = 0; s <= n; ++s) v[k - i + s] = neg_y(s);
    }
    for (std::size_t s = 0; s <= n; ++s) v[m + i - 1 + s] = x(s);
    out.push_back(std::move(v));
  }
  return out;
}

RSDatum random_rs_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  Rng rng(seed);
  const std::size_t N = 2 * n + 2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    RSDatum d{n, k, {}, {}};
    for (std::size_t s = 0; s <= n; ++s) d.f.push_back(HomogeneousForm::random(f, rng, N, 1));
    for (std::size_t m = 0; m < n + 2 * k - 1; ++m) d.h.push_back(HomogeneousForm::random(f, rng, N, 1));
    if (rank(f, linear_coefficients(d.f, N)) == n + 1) return d;
  }
  throw Error(ErrorCode::RetryLimit, "no independent f after 32 draws");
}

SubspaceParam distinguished_subspace(const PrimeField& f, const RSDatum& d) {
  check_shape(d);
  check_independent(f, d);
  return solve_subspace(f, d.f);
}

bool InstabilityResult::passed(std::size_t n, std::size_t k) const {
  return distinguished == n + k && counterexamples.empty() && bound_violations.empty() &&
         static_cast<int>(other_values.size()) == trials;
}

InstabilityResult max_instability_check(const PrimeField& f, const RSDatum& d, int trials, std::uint64_t seed) {
  LinearFormMatrix A = build_rs(f, d);
  const std::size_t n = d.n, k = d.k, N = d.nvars();
  Rng rng(seed);
  InstabilityResult res;
  res.trials = trials;
  res.distinguished = h0_restricted(f, A, distinguished_subspace(f, d), rng.fork());
  for (int t = 0; t < trials; ++t) {
    auto L = SubspaceParam::random(f, rng, N, n);
    try {
      std::size_t v = h0_restricted(f, A, L, rng.fork());
      res.other_values.push_back(v);
      if (v >= n + k) res.counterexamples.push_back(L.P);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDropOnSubspace) throw;
      ++res.rank_drop_events;
    }
  }
  for (int t = 0; t < trials; ++t) {
    std::size_t r = 1 + rng.below(2 * n);
    auto L = SubspaceParam::random(f, rng, N, r);
    try {
      std::size_t v = h0_restricted(f, A, L, rng.fork());
      res.bound_values.push_back({r, v});
      if (v + r > 2 * n + k) res.bound_violations.push_back(L.P);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDropOnSubspace) throw;
      ++res.rank_drop_events;
    }
  }
  return res;
}

Vector poly_gcd(const PrimeField& f, Vector a, Vector b) {
  auto trim = [](Vector& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    Scalar lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      Scalar c = f.mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Scalar inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

bool line_minor_certificate_n1(const PrimeField& f, const RSDatum& d) {
  if (d.n != 1) throw Error(ErrorCode::NotALine, "the minor certificate applies to n = 1 only");
  check_shape(d);
  const std::size_t k = d.k;
  auto L = distinguished_subspace(f, d);
  std::vector<HomogeneousForm> hr;
  for (const auto& h : d.h) hr.push_back(restrict(f, h, L));  // binary linear forms in (s, t)
  auto H_at = [&](Scalar s, Scalar t) {
    Matrix M(k, k + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j <= k; ++j) M(i, j) = f.add(f.mul(s, hr[i + j].coeffs[0]), f.mul(t, hr[i + j].coeffs[1]));
    return M;
  };
  if (f.modulus() <= k) throw Error(ErrorCode::FieldTooSmall, "not enough interpolation nodes");
  // Each minor is a degree-k binary form; recover its dehomogenisation
  // p(s) = minor(s, 1) from k+1 values.
  Matrix V(k + 1, k + 1);
  for (std::size_t r = 0; r <= k; ++r)
    for (std::size_t c = 0; c <= k; ++c) V(r, c) = f.pow(static_cast<Scalar>(r), c);
  Matrix Vinv = inverse(f, V);
  std::vector<Matrix> samples;
  for (std::size_t r = 0; r <= k; ++r) samples.push_back(H_at(static_cast<Scalar>(r), 1));
  Matrix at_infinity = H_at(1, 0);

  Vector g;
  bool all_vanish_at_infinity = true;
  for (std::size_t drop = 0; drop <= k; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c <= k; ++c)
      if (c != drop) keep.push_back(c);
    Vector values(k + 1);
    for (std::size_t r = 0; r <= k; ++r) values[r] = determinant(f, select_columns(samples[r], keep));
    Vector coeffs = multiply(f, Vinv, values);
    if (determinant(f, select_columns(at_infinity, keep)) != 0) all_vanish_at_infinity = false;
    g = poly_gcd(f, g, coeffs);
  }
  if (all_vanish_at_infinity) return false;
  return g.size() == 1;  // nonzero constant gcd
}

MonadPresentation rs_presentation(const PrimeField& f, const RSDatum& d, int trials, std::uint64_t seed) {
  MonadPresentation M = make_presentation(f, build_rs(f, d), trials, seed);
  if (d.n == 1 && M.rank_evidence.mode != EvidenceMode::Disproved && line_minor_certificate_n1(f, d)) {
    M.rank_evidence.mode = EvidenceMode::Certificate;
  }
  return M;
}

RSGroupElement RSGroupElement::identity(std::size_t n, std::size_t k) {
  return RSGroupElement{Matrix::identity(2), 1, Vector(2 * n + 2 * k - 1, 0)};
}

RSGroupElement RSGroupElement::random(const PrimeField& f, Rng& rng, std::size_t n, std::size_t k) {
  RSGroupElement e = identity(n, k);
  do {
    e.g = Matrix::random(f, rng, 2, 2);
  } while (determinant(f, e.g) == 0);
  e.t = rng.nonzero(f);
  for (auto& c : e.u) c = rng.scalar(f);
  return e;
}

RSDatum apply_group(const PrimeField& f, const RSGroupElement& e, const RSDatum& d) {
  check_shape(d);
  const std::size_t hdeg = d.n + 2 * d.k - 2;
  if (e.u.size() != 2 * d.n + 2 * d.k - 1 || e.t == 0) {
    throw Error(ErrorCode::InvalidArgument, "group element does not match the datum");
  }
  Matrix F = f_matrix(d), H = h_matrix(d);
  Matrix F2 = scale(f, e.t, multiply(f, F, sym_power(f, e.g, d.n).transpose()));
  Matrix shifted = sub(f, H, contraction(f, F, e.u, hdeg + 1));
  Matrix H2 = scale(f, e.t, multiply(f, shifted, sym_power(f, inverse(f, e.g), hdeg)));
  return RSDatum{d.n, d.k, forms_of(F2), forms_of(H2)};
}

RSGroupElement root_of_unity_element(const PrimeField& f, std::size_t n, std::size_t k) {
  const std::size_t order = n + k - 1;
  Scalar rho = f.root_of_unity(static_cast<std::uint32_t>(order));
  RSGroupElement e = RSGroupElement::identity(n, k);
  e.g = scale(f, rho, Matrix::identity(2));
  e.t = f.inv(f.pow(rho, n));
  return e;
}

Vector flatten(const RSDatum& d) {
  Vector v;
  for (const auto* forms : {&d.f, &d.h})
    for (const auto& h : *forms) v.insert(v.end(), h.coeffs.begin(), h.coeffs.end());
  return v;
}

std::size_t orbit_rank(const PrimeField& f, const RSDatum& d) {
  check_shape(d);
  const std::size_t hdeg = d.n + 2 * d.k - 2;
  const std::size_t ulen = 2 * d.n + 2 * d.k - 1;
  Matrix F = f_matrix(d), H = h_matrix(d);

  auto tangent = [&](const Matrix& dF, const Matrix& dH) {
    RSDatum t{d.n, d.k, forms_of(dF), forms_of(dH)};
    return flatten(t);
  };
  std::vector<Vector> tangents;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      Matrix xi(2, 2);
      xi(r, c) = 1;
      Matrix dF = multiply(f, F, sym_power_derivative(f, xi, d.n).transpose());
      Matrix dH = scale(f, f.neg(1), multiply(f, H, sym_power_derivative(f, xi, hdeg)));
      tangents.push_back(tangent(dF, dH));
    }
  tangents.push_back(tangent(F, H));  // delta t
  for (std::size_t i = 0; i < ulen; ++i) {
    Vector u(ulen, 0);
    u[i] = 1;
    Matrix dH = scale(f, f.neg(1), contraction(f, F, u, hdeg + 1));
    tangents.push_back(tangent(Matrix(F.rows(), F.cols()), dH));
  }
  return rank(f, rows_to_matrix(tangents, rs_parameter_dim(d.n, d.k)));
}

}  // namespace instanton
