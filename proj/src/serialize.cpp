#include "instanton/serialize.hpp"

#include "instanton/error.hpp"

namespace instanton {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Scalar scalar_from_json(const PrimeField& f, const json& j) {
  if (!j.is_number_integer()) fail("expected an integer");
  return f.from_int(j.get<long long>());
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned()) {
    fail(std::string("missing or invalid field '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) fail(std::string("missing array '") + key + "'");
  return j[key];
}

std::vector<HomogeneousForm> forms_from_json(const PrimeField& f, const json& j, std::size_t count, std::size_t nvars,
                                             const char* key) {
  if (j.size() != count) fail(std::string("'") + key + "' has the wrong length");
  std::vector<HomogeneousForm> out;
  for (const auto& e : j) out.push_back(linear_form_from_json(f, e, nvars));
  return out;
}

}  // namespace

json to_json(const Vector& v) { return json(v); }

json to_json(const HomogeneousForm& h) { return json(h.coeffs); }

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const LinearFormMatrix& A) {
  json tensor = json::array();
  for (const auto& m : A.coeffs) tensor.push_back(to_json(m));
  return {{"n", A.n}, {"k", A.k}, {"tensor", tensor}};
}

json to_json(const ThooftDatum& d) {
  json l = json::array(), lp = json::array();
  for (const auto& h : d.l) l.push_back(to_json(h));
  for (const auto& h : d.lprime) lp.push_back(to_json(h));
  return {{"n", d.n}, {"k", d.k}, {"a", to_json(d.a)}, {"l", l}, {"lprime", lp}};
}

json to_json(const RSDatum& d) {
  json f = json::array(), h = json::array();
  for (const auto& x : d.f) f.push_back(to_json(x));
  for (const auto& x : d.h) h.push_back(to_json(x));
  return {{"n", d.n}, {"k", d.k}, {"f", f}, {"h", h}};
}

Matrix matrix_from_json(const PrimeField& f, const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  if (j.empty()) return Matrix();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

HomogeneousForm linear_form_from_json(const PrimeField& f, const json& j, std::size_t nvars) {
  if (!j.is_array() || j.size() != nvars) fail("linear form must list one coefficient per variable");
  Vector c;
  for (const auto& e : j) c.push_back(scalar_from_json(f, e));
  return HomogeneousForm::linear(std::move(c));
}

LinearFormMatrix monad_from_json(const PrimeField& f, const json& j) {
  const std::size_t n = size_field(j, "n"), k = size_field(j, "k");
  if (n < 1 || k < 1) fail("n and k must be positive");
  const json& t = array_field(j, "tensor");
  LinearFormMatrix A = LinearFormMatrix::zero(n, k);
  if (t.size() != A.nvars) fail("tensor needs one slice per variable");
  for (std::size_t v = 0; v < A.nvars; ++v) {
    Matrix m = matrix_from_json(f, t[v]);
    if (m.rows() != k || m.cols() != 2 * n + 2 * k) fail("tensor slice has the wrong shape");
    A.coeffs[v] = std::move(m);
  }
  return A;
}

ThooftDatum thooft_from_json(const PrimeField& f, const json& j) {
  ThooftDatum d;
  d.n = size_field(j, "n");
  d.k = size_field(j, "k");
  if (d.n < 1 || d.k < 1) fail("n and k must be positive");
  d.a = matrix_from_json(f, array_field(j, "a"));
  if (d.a.rows() != d.k || d.a.cols() != d.n + d.k) fail("a must be k x (n+k)");
  d.l = forms_from_json(f, array_field(j, "l"), d.n + d.k, d.nvars(), "l");
  d.lprime = forms_from_json(f, array_field(j, "lprime"), d.n + d.k, d.nvars(), "lprime");
  return d;
}

RSDatum rs_from_json(const PrimeField& f, const json& j) {
  RSDatum d;
  d.n = size_field(j, "n");
  d.k = size_field(j, "k");
  if (d.n < 1 || d.k < 1) fail("n and k must be positive");
  d.f = forms_from_json(f, array_field(j, "f"), d.n + 1, d.nvars(), "f");
  d.h = forms_from_json(f, array_field(j, "h"), d.n + 2 * d.k - 1, d.nvars(), "h");
  return d;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

}  // namespace instanton
