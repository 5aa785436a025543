#include "instanton/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "instanton/error.hpp"

namespace instanton {

namespace {

std::size_t binom(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

void enumerate(std::size_t nvars, std::size_t var, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var + 1 == nvars) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

// Position of e among degree-d monomials: count the monomials that beat it
// at the first differing variable.
std::size_t lex_rank(const Exponent& e, unsigned degree) {
  const std::size_t nvars = e.size();
  std::size_t idx = 0;
  unsigned left = degree;
  for (std::size_t w = 0; w + 1 < nvars; ++w) {
    if (e[w] > left) throw Error(ErrorCode::InvalidArgument, "exponent degree mismatch");
    for (unsigned larger = left; larger > e[w]; --larger) {
      idx += binom(nvars - w - 2 + (left - larger), left - larger);
    }
    left -= e[w];
  }
  if (e[nvars - 1] != left) throw Error(ErrorCode::InvalidArgument, "exponent degree mismatch");
  return idx;
}

}  // namespace

std::size_t monomial_count(std::size_t nvars, int degree) {
  if (degree < 0 || nvars == 0) return 0;
  return binom(nvars - 1 + static_cast<std::size_t>(degree), static_cast<std::size_t>(degree));
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) throw Error(ErrorCode::InvalidArgument, "monomial basis needs at least one variable");
  Exponent cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, monomials_);
  times_var_.resize(monomials_.size() * nvars);
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    Exponent e = monomials_[i];
    for (std::size_t v = 0; v < nvars; ++v) {
      ++e[v];
      times_var_[i * nvars + v] = lex_rank(e, degree + 1);
      --e[v];
    }
  }
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  if (e.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "exponent length mismatch");
  return lex_rank(e, degree_);
}

const MonomialBasis& monomial_basis(std::size_t nvars, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_unique<MonomialBasis>(nvars, degree);
  return *slot;
}

HomogeneousForm HomogeneousForm::zero(std::size_t nvars, unsigned degree) {
  return {nvars, degree, std::vector<Scalar>(monomial_count(nvars, static_cast<int>(degree)), 0)};
}

HomogeneousForm HomogeneousForm::variable(std::size_t nvars, std::size_t var) {
  auto h = zero(nvars, 1);
  h.coeffs.at(var) = 1;
  return h;
}

HomogeneousForm HomogeneousForm::linear(std::vector<Scalar> coeffs) {
  std::size_t n = coeffs.size();
  return {n, 1, std::move(coeffs)};
}

HomogeneousForm HomogeneousForm::random(const PrimeField& f, Rng& rng, std::size_t nvars, unsigned degree) {
  auto h = zero(nvars, degree);
  for (auto& c : h.coeffs) c = rng.scalar(f);
  return h;
}

bool HomogeneousForm::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

namespace {
void check_same_space(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.nvars != b.nvars || a.degree != b.degree) {
    throw Error(ErrorCode::InvalidArgument, "forms live in different spaces");
  }
}
}  // namespace

HomogeneousForm add(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b) {
  check_same_space(a, b);
  HomogeneousForm c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = f.add(a.coeffs[i], b.coeffs[i]);
  return c;
}

HomogeneousForm sub(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b) {
  check_same_space(a, b);
  HomogeneousForm c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = f.sub(a.coeffs[i], b.coeffs[i]);
  return c;
}

HomogeneousForm scale(const PrimeField& f, Scalar s, const HomogeneousForm& a) {
  HomogeneousForm c = a;
  for (auto& x : c.coeffs) x = f.mul(s, x);
  return c;
}

HomogeneousForm multiply(const PrimeField& f, const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.nvars != b.nvars) throw Error(ErrorCode::InvalidArgument, "forms have different variable counts");
  const auto& ba = monomial_basis(a.nvars, a.degree);
  const auto& bb = monomial_basis(b.nvars, b.degree);
  const auto& bc = monomial_basis(a.nvars, a.degree + b.degree);
  HomogeneousForm c = HomogeneousForm::zero(a.nvars, a.degree + b.degree);
  Exponent e(a.nvars);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      for (std::size_t v = 0; v < a.nvars; ++v) e[v] = ba[i][v] + bb[j][v];
      std::size_t idx = bc.index_of(e);
      c.coeffs[idx] = f.add(c.coeffs[idx], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return c;
}

Scalar evaluate(const PrimeField& f, const HomogeneousForm& a, std::span<const Scalar> point) {
  if (point.size() != a.nvars) throw Error(ErrorCode::InvalidArgument, "point length does not match nvars");
  const auto& basis = monomial_basis(a.nvars, a.degree);
  Scalar total = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    Scalar term = a.coeffs[i];
    for (std::size_t v = 0; v < a.nvars; ++v) term = f.mul(term, f.pow(point[v], basis[i][v]));
    total = f.add(total, term);
  }
  return total;
}

SubspaceParam SubspaceParam::from_matrix(const PrimeField& f, Matrix P) {
  if (P.cols() == 0 || rank(f, P) != P.cols()) {
    throw Error(ErrorCode::RankDeficient, "subspace parameterization is not of full column rank");
  }
  return SubspaceParam{std::move(P)};
}

SubspaceParam SubspaceParam::span(const PrimeField& f, const std::vector<Vector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "empty span");
  return from_matrix(f, rows_to_matrix(points, points.front().size()).transpose());
}

SubspaceParam SubspaceParam::random(const PrimeField& f, Rng& rng, std::size_t ambient, std::size_t projective_dim) {
  if (projective_dim + 1 > ambient) throw Error(ErrorCode::InvalidArgument, "subspace larger than ambient space");
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix P = Matrix::random(f, rng, ambient, projective_dim + 1);
    if (rank(f, P) == P.cols()) return SubspaceParam{std::move(P)};
  }
  throw Error(ErrorCode::RetryLimit, "could not draw a full-rank subspace");
}

Vector SubspaceParam::push_forward(const PrimeField& f, std::span<const Scalar> y) const {
  return multiply(f, P, y);
}

HomogeneousForm restrict(const PrimeField& f, const HomogeneousForm& a, const SubspaceParam& L) {
  if (a.nvars != L.ambient_dim()) throw Error(ErrorCode::InvalidArgument, "form and subspace ambient mismatch");
  const std::size_t m = L.fiber_dim();
  // x_v restricted is the linear form given by row v of P.
  std::vector<HomogeneousForm> xs;
  xs.reserve(a.nvars);
  for (std::size_t v = 0; v < a.nvars; ++v) {
    auto r = L.P.row(v);
    xs.push_back(HomogeneousForm::linear(Vector(r.begin(), r.end())));
  }
  const auto& basis = monomial_basis(a.nvars, a.degree);
  HomogeneousForm out = HomogeneousForm::zero(m, a.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    HomogeneousForm term = HomogeneousForm::zero(m, 0);
    term.coeffs[0] = a.coeffs[i];
    for (std::size_t v = 0; v < a.nvars; ++v)
      for (unsigned e = 0; e < basis[i][v]; ++e) term = multiply(f, term, xs[v]);
    out = add(f, out, term);
  }
  return out;
}

Matrix linear_coefficients(const std::vector<HomogeneousForm>& forms, std::size_t nvars) {
  Matrix m(forms.size(), nvars);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].degree != 1 || forms[i].nvars != nvars) {
      throw Error(ErrorCode::InvalidArgument, "expected linear forms in " + std::to_string(nvars) + " variables");
    }
    for (std::size_t j = 0; j < nvars; ++j) m(i, j) = forms[i].coeffs[j];
  }
  return m;
}

SubspaceParam solve_subspace(const PrimeField& f, const std::vector<HomogeneousForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "no forms given");
  const std::size_t nvars = forms.front().nvars;
  Matrix coeffs = linear_coefficients(forms, nvars);
  if (rank(f, coeffs) != forms.size()) throw Error(ErrorCode::RankDeficient, "linear forms are dependent");
  auto basis = kernel_basis(f, coeffs);
  if (basis.empty()) throw Error(ErrorCode::RankDeficient, "forms cut out the empty set");
  return SubspaceParam{rows_to_matrix(basis, nvars).transpose()};
}

}  // namespace instanton
