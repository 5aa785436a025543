#include "instanton/thooft.hpp"

#include <functional>
#include <numeric>

#include "instanton/error.hpp"

namespace instanton {

namespace {

// Calls fn on every r-subset of {0..n-1}; stops early when fn returns false.
bool for_each_subset(std::size_t n, std::size_t r, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (!fn(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Column j holds the powers of nodes[j].
Matrix vandermonde(const PrimeField& f, std::size_t rows, const std::vector<Scalar>& nodes) {
  Matrix a(rows, nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a(i, j) = f.pow(nodes[j], i);
  return a;
}

// Nodes j^power + shift, j = 1..count.
std::vector<Scalar> node_range(const PrimeField& f, std::size_t count, std::uint64_t power, std::uint64_t shift) {
  std::vector<Scalar> out;
  for (std::uint64_t j = 1; j <= count; ++j) {
    std::uint64_t v = shift;
    std::uint64_t t = 1;
    for (std::uint64_t e = 0; e < power; ++e) t *= j;
    v += t;
    if (v >= f.modulus()) throw Error(ErrorCode::FieldTooSmall, "not enough distinct nodes in the field");
    out.push_back(static_cast<Scalar>(v));
  }
  return out;
}

// Moment-curve form sum_i node^i x_{offset+i}.
HomogeneousForm moment_form(const PrimeField& f, std::size_t nvars, std::size_t offset, std::size_t len, Scalar node) {
  auto h = HomogeneousForm::zero(nvars, 1);
  for (std::size_t i = 0; i < len; ++i) h.coeffs[offset + i] = f.pow(node, i);
  return h;
}

void check_shape(const ThooftDatum& d) {
  const std::size_t m = d.n + d.k;
  if (d.a.rows() != d.k || d.a.cols() != m || d.l.size() != m || d.lprime.size() != m) {
    throw Error(ErrorCode::InvalidArgument, "'t Hooft datum has inconsistent shape");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (d.l[j].nvars != d.nvars() || d.l[j].degree != 1 || d.lprime[j].nvars != d.nvars() ||
        d.lprime[j].degree != 1) {
      throw Error(ErrorCode::InvalidArgument, "'t Hooft forms must be linear in 2n+2 variables");
    }
  }
}

// Every r-subset of the forms is independent.
bool general_position(const PrimeField& f, const std::vector<HomogeneousForm>& forms, std::size_t r) {
  Matrix coeffs = linear_coefficients(forms, forms.front().nvars);
  return for_each_subset(forms.size(), r, [&](const std::vector<std::size_t>& rows) {
    Matrix sub(rows.size(), coeffs.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < coeffs.cols(); ++c) sub(i, c) = coeffs(rows[i], c);
    return rank(f, sub) == rows.size();
  });
}

}  // namespace

std::size_t thooft_parameter_dim(std::size_t n, std::size_t k) { return (n + k) * (k + 4 * n + 4); }

std::size_t thooft_group_dim(std::size_t n, std::size_t k) { return 4 * (n + k) + k * k; }

bool all_minors_nonzero(const PrimeField& f, const Matrix& a) {
  if (a.rows() > a.cols()) return false;
  return for_each_subset(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
    return determinant(f, select_columns(a, cols)) != 0;
  });
}

LinearFormMatrix build_thooft(const PrimeField& f, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t m = d.n + d.k;
  LinearFormMatrix A = LinearFormMatrix::zero(d.n, d.k);
  for (std::size_t v = 0; v < d.nvars(); ++v)
    for (std::size_t i = 0; i < d.k; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        A.coeffs[v](i, j) = f.mul(d.a(i, j), d.l[j].coeffs[v]);
        A.coeffs[v](i, m + j) = f.mul(d.a(i, j), d.lprime[j].coeffs[v]);
      }
  return A;
}

std::vector<FormVector> canonical_syzygies(const PrimeField& f, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t m = d.n + d.k;
  std::vector<FormVector> out;
  for (std::size_t j = 0; j < m; ++j) {
    FormVector v(2 * m, HomogeneousForm::zero(d.nvars(), 1));
    v[j] = d.lprime[j];
    v[m + j] = scale(f, f.neg(1), d.l[j]);
    out.push_back(std::move(v));
  }
  return out;
}

ThooftDatum proof_witness_general(const PrimeField& f, std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  // Node sets j, j^2 and j^3 (shifted): distinct within each set and not
  // related to one another by an affine change of coordinate.
  const std::size_t m = n + k;
  auto l_nodes = node_range(f, m, 1, 0);
  auto lp_nodes = node_range(f, m, 2, m);
  ThooftDatum d{n, k, vandermonde(f, k, node_range(f, m, 3, m * m + m)), {}, {}};
  for (std::size_t j = 0; j < m; ++j) {
    d.l.push_back(moment_form(f, d.nvars(), 0, n + 1, l_nodes[j]));
    d.lprime.push_back(moment_form(f, d.nvars(), n + 1, n + 1, lp_nodes[j]));
  }
  return d;
}

ThooftDatum proof_witness_syz(const PrimeField& f, std::size_t n, std::size_t k) {
  if (n < 1 || k < 3) throw Error(ErrorCode::InvalidArgument, "syzygy witness needs n >= 1 and k >= 3");
  ThooftDatum d{n, k, vandermonde(f, k, node_range(f, n + k, 1, 0)), {}, {}};
  const std::size_t N = d.nvars();
  for (std::size_t j = 1; j <= n + k; ++j) {
    std::size_t v = j <= n ? j : (j == n + 1 ? n : n + 1);
    std::size_t w = j <= n + 1 ? j : (j == n + 2 ? n : n + 1);
    d.l.push_back(HomogeneousForm::variable(N, v - 1));
    d.lprime.push_back(HomogeneousForm::variable(N, n + 1 + w - 1));
  }
  return d;
}

std::size_t syzygy_dim_mixed_block(const PrimeField& f, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t n = d.n, m = d.n + d.k, N = d.nvars();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t v = 0; v <= n; ++v) {
      if (d.l[j].coeffs[n + 1 + v] != 0 || d.lprime[j].coeffs[v] != 0) {
        throw Error(ErrorCode::InvalidArgument, "mixed block needs l in span(x) and l' in span(y)");
      }
    }
  // Unknowns: y-coefficients of the first n+k slots and x-coefficients of the last n+k.
  LinearFormMatrix A = build_thooft(f, d);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < 2 * m; ++c)
    for (std::size_t v = 0; v < N; ++v) {
      bool first_half = c < m, is_x = v <= n;
      if (first_half != is_x) cols.push_back(c * N + v);
    }
  return kernel_dim(f, select_columns(syzygy_matrix(f, A, 1), cols));
}

namespace {

bool passes_screen(const PrimeField& f, const ThooftDatum& d, std::uint64_t seed) {
  if (!all_minors_nonzero(f, d.a) || !torus_stable(d)) return false;
  for (std::size_t j = 0; j < d.n + d.k; ++j) {
    if (rank(f, linear_coefficients({d.l[j], d.lprime[j]}, d.nvars())) < 2) return false;
  }
  return sample_rank_evidence(f, build_thooft(f, d), 20, seed).mode != EvidenceMode::Disproved;
}

}  // namespace

ThooftDatum random_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    ThooftDatum d{n, k, Matrix::random(f, rng, k, n + k), {}, {}};
    for (std::size_t j = 0; j < n + k; ++j) {
      d.l.push_back(HomogeneousForm::random(f, rng, d.nvars(), 1));
      d.lprime.push_back(HomogeneousForm::random(f, rng, d.nvars(), 1));
    }
    if (passes_screen(f, d, rng.fork())) return d;
  }
  throw Error(ErrorCode::RetryLimit, "no generic 't Hooft datum after 32 draws");
}

ThooftDatum random_structured_datum(const PrimeField& f, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  Rng rng(seed);
  const std::size_t N = 2 * n + 2;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix basis = Matrix::random(f, rng, N, N);  // columns: first n+1 span V, rest span W
    ThooftDatum d{n, k, Matrix::random(f, rng, k, n + k), {}, {}};
    for (std::size_t j = 0; j < n + k; ++j) {
      Vector cv(n + 1), cw(n + 1);
      for (auto& c : cv) c = rng.scalar(f);
      for (auto& c : cw) c = rng.scalar(f);
      Vector l(N, 0), lp(N, 0);
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t i = 0; i <= n; ++i) {
          l[r] = f.add(l[r], f.mul(basis(r, i), cv[i]));
          lp[r] = f.add(lp[r], f.mul(basis(r, n + 1 + i), cw[i]));
        }
      d.l.push_back(HomogeneousForm::linear(std::move(l)));
      d.lprime.push_back(HomogeneousForm::linear(std::move(lp)));
    }
    if (fullrank_certificate(f, d)) return d;
  }
  throw Error(ErrorCode::RetryLimit, "no certified 't Hooft datum after 32 draws");
}

bool fullrank_certificate(const PrimeField& f, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t N = d.nvars();
  if (!all_minors_nonzero(f, d.a)) return false;
  if (rank(f, linear_coefficients(d.l, N)) != d.n + 1) return false;
  if (rank(f, linear_coefficients(d.lprime, N)) != d.n + 1) return false;
  if (rank(f, vstack(linear_coefficients(d.l, N), linear_coefficients(d.lprime, N))) != N) return false;
  return general_position(f, d.l, d.n + 1) && general_position(f, d.lprime, d.n + 1);
}

MonadPresentation thooft_presentation(const PrimeField& f, const ThooftDatum& d, int trials, std::uint64_t seed) {
  MonadPresentation M = make_presentation(f, build_thooft(f, d), trials, seed);
  if (M.rank_evidence.mode != EvidenceMode::Disproved && fullrank_certificate(f, d)) {
    M.rank_evidence.mode = EvidenceMode::Certificate;
  }
  return M;
}

Matrix deformation_system(const PrimeField& f, const LinearFormMatrix& A) {
  const std::size_t k = A.rows(), cols = A.cols(), N = A.nvars;
  const auto& quad = monomial_basis(N, 2);
  const auto& lin = monomial_basis(N, 1);
  Matrix J = symplectic_J(f, A.n + A.k);
  std::vector<Matrix> AJ;
  for (const auto& Am : A.coeffs) AJ.push_back(multiply(f, Am, J));

  const std::size_t pairs = k * (k - 1) / 2;
  Matrix M(pairs * quad.size(), k * cols * N);
  auto unknown = [&](std::size_t l, std::size_t r, std::size_t c) { return (l * k + r) * cols + c; };
  std::size_t pair = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++pair) {
      for (std::size_t m = 0; m < N; ++m)
        for (std::size_t l = 0; l < N; ++l) {
          std::size_t row = pair * quad.size() + lin.times_variable(m, l);
          for (std::size_t c = 0; c < cols; ++c) {
            Scalar pi = AJ[m](i, c), pj = AJ[m](j, c);
            if (pi != 0) M(row, unknown(l, j, c)) = f.add(M(row, unknown(l, j, c)), pi);
            if (pj != 0) M(row, unknown(l, i, c)) = f.sub(M(row, unknown(l, i, c)), pj);
          }
        }
    }
  return M;
}

std::size_t deformation_space_dim(const PrimeField& f, const LinearFormMatrix& A, const Deadline* deadline) {
  return kernel_dim(f, deformation_system(f, A), deadline);
}

ThooftGroupElement ThooftGroupElement::identity(const PrimeField&, std::size_t n, std::size_t k) {
  ThooftGroupElement g;
  g.alpha = Matrix::identity(k);
  g.beta.assign(n + k, Matrix::identity(2));
  g.gamma.assign(n + k, 1);
  g.sigma.resize(n + k);
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  return g;
}

ThooftGroupElement ThooftGroupElement::minus_one(const PrimeField& f, std::size_t n, std::size_t k) {
  ThooftGroupElement g = identity(f, n, k);
  Scalar m1 = f.neg(1);
  g.alpha = scale(f, m1, g.alpha);
  for (auto& b : g.beta) b = scale(f, m1, b);
  for (auto& c : g.gamma) c = m1;
  return g;
}

ThooftGroupElement ThooftGroupElement::random(const PrimeField& f, Rng& rng, std::size_t n, std::size_t k) {
  ThooftGroupElement g = identity(f, n, k);
  do {
    g.alpha = Matrix::random(f, rng, k, k);
  } while (determinant(f, g.alpha) == 0);
  for (auto& b : g.beta) {
    Scalar det;
    do {
      b = Matrix::random(f, rng, 2, 2);
      det = determinant(f, b);
    } while (det == 0);
    Scalar s = f.inv(det);
    b(0, 0) = f.mul(b(0, 0), s);
    b(0, 1) = f.mul(b(0, 1), s);
  }
  for (auto& c : g.gamma) c = rng.nonzero(f);
  for (std::size_t i = g.sigma.size(); i > 1; --i) std::swap(g.sigma[i - 1], g.sigma[rng.below(i)]);
  return g;
}

ThooftDatum apply_group(const PrimeField& f, const ThooftGroupElement& g, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t m = d.n + d.k;
  if (g.alpha.rows() != d.k || g.beta.size() != m || g.gamma.size() != m || g.sigma.size() != m) {
    throw Error(ErrorCode::InvalidArgument, "group element does not match the datum");
  }
  Matrix alpha_inv = inverse(f, g.alpha);
  ThooftDatum out{d.n, d.k, Matrix(d.k, m), {}, {}};
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t s = g.sigma[j];
    if (g.gamma[j] == 0) throw Error(ErrorCode::InvalidArgument, "gamma must be nonzero");
    for (std::size_t r = 0; r < d.k; ++r) {
      Scalar acc = 0;
      for (std::size_t c = 0; c < d.k; ++c) acc = f.add(acc, f.mul(alpha_inv(r, c), d.a(c, s)));
      out.a(r, j) = f.mul(g.gamma[j], acc);
    }
    Scalar ginv = f.inv(g.gamma[j]);
    const Matrix& b = g.beta[j];
    out.l.push_back(scale(f, ginv, add(f, scale(f, b(0, 0), d.l[s]), scale(f, b(0, 1), d.lprime[s]))));
    out.lprime.push_back(scale(f, ginv, add(f, scale(f, b(1, 0), d.l[s]), scale(f, b(1, 1), d.lprime[s]))));
  }
  return out;
}

Vector flatten(const ThooftDatum& d) {
  Vector v(d.a.data());
  for (const auto& h : d.l) v.insert(v.end(), h.coeffs.begin(), h.coeffs.end());
  for (const auto& h : d.lprime) v.insert(v.end(), h.coeffs.begin(), h.coeffs.end());
  return v;
}

std::size_t orbit_rank(const PrimeField& f, const ThooftDatum& d) {
  check_shape(d);
  const std::size_t m = d.n + d.k, k = d.k, N = d.nvars();
  const std::size_t a_size = k * m;
  const std::size_t dim = thooft_parameter_dim(d.n, k);
  auto l_index = [&](std::size_t j, std::size_t v) { return a_size + j * N + v; };
  auto lp_index = [&](std::size_t j, std::size_t v) { return a_size + m * N + j * N + v; };

  std::vector<Vector> tangents;
  // delta alpha = E_rs: delta a_j = -E_rs a_j
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s) {
      Vector t(dim, 0);
      for (std::size_t j = 0; j < m; ++j) t[r * m + j] = f.neg(d.a(s, j));
      tangents.push_back(std::move(t));
    }
  const Matrix sl2[3] = {Matrix::from_ints(f, {{1, 0}, {0, -1}}), Matrix::from_ints(f, {{0, 1}, {0, 0}}),
                         Matrix::from_ints(f, {{0, 0}, {1, 0}})};
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& b : sl2) {
      Vector t(dim, 0);
      for (std::size_t v = 0; v < N; ++v) {
        t[l_index(j, v)] = f.add(f.mul(b(0, 0), d.l[j].coeffs[v]), f.mul(b(0, 1), d.lprime[j].coeffs[v]));
        t[lp_index(j, v)] = f.add(f.mul(b(1, 0), d.l[j].coeffs[v]), f.mul(b(1, 1), d.lprime[j].coeffs[v]));
      }
      tangents.push_back(std::move(t));
    }
    // delta gamma_j: a_j scales up, L_j scales down
    Vector t(dim, 0);
    for (std::size_t r = 0; r < k; ++r) t[r * m + j] = d.a(r, j);
    for (std::size_t v = 0; v < N; ++v) {
      t[l_index(j, v)] = f.neg(d.l[j].coeffs[v]);
      t[lp_index(j, v)] = f.neg(d.lprime[j].coeffs[v]);
    }
    tangents.push_back(std::move(t));
  }
  return rank(f, rows_to_matrix(tangents, dim));
}

bool torus_stable(const ThooftDatum& d) {
  check_shape(d);
  for (std::size_t j = 0; j < d.n + d.k; ++j) {
    bool column_zero = true;
    for (std::size_t r = 0; r < d.k; ++r) column_zero = column_zero && d.a(r, j) == 0;
    if (column_zero) return false;
    if (d.l[j].is_zero() && d.lprime[j].is_zero()) return false;
  }
  return true;
}

}  // namespace instanton
