#pragma once

#include "json.hpp"

#include "instanton/monad.hpp"
#include "instanton/rs.hpp"
#include "instanton/thooft.hpp"

namespace instanton {

using json = nlohmann::json;

// Scalars are written in [0, p); negative integers are accepted on input.
json to_json(const HomogeneousForm& h);
json to_json(const Matrix& m);
json to_json(const Vector& v);
json to_json(const LinearFormMatrix& A);  // {n, k, tensor[nvars][k][2n+2k]}
json to_json(const ThooftDatum& d);       // {n, k, a, l, lprime}
json to_json(const RSDatum& d);           // {n, k, f, h}

// All parsers throw Error(Parse) on malformed input.
Matrix matrix_from_json(const PrimeField& f, const json& j);
HomogeneousForm linear_form_from_json(const PrimeField& f, const json& j, std::size_t nvars);
LinearFormMatrix monad_from_json(const PrimeField& f, const json& j);
ThooftDatum thooft_from_json(const PrimeField& f, const json& j);
RSDatum rs_from_json(const PrimeField& f, const json& j);

json parse_json(const std::string& text);

}  // namespace instanton
