#include "instanton.h"

#include <cstring>
#include <string>

#include "instanton/error.hpp"
#include "instanton/rs.hpp"
#include "instanton/suites.hpp"
#include "instanton/thooft.hpp"

using namespace instanton;

struct inst_config {
  SuiteOptions options;
};

struct inst_report {
  VerificationReport report;
};

struct inst_monad {
  PrimeField field;
  LinearFormMatrix A;
};

namespace {

thread_local std::string last_error;

inst_status map(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return INST_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return INST_ERR_PARSE;
    case ErrorCode::RankDeficient: return INST_ERR_RANK_DEFICIENT;
    case ErrorCode::ZeroFunctional: return INST_ERR_ZERO_FUNCTIONAL;
    case ErrorCode::NegativeResult: return INST_ERR_NEGATIVE_RESULT;
    case ErrorCode::RankDropOnSubspace: return INST_ERR_RANK_DROP_ON_SUBSPACE;
    case ErrorCode::DegenerateLine: return INST_ERR_DEGENERATE_LINE;
    case ErrorCode::FieldTooSmall: return INST_ERR_FIELD_TOO_SMALL;
    case ErrorCode::RetryLimit: return INST_ERR_RETRY_LIMIT;
    case ErrorCode::DependentF: return INST_ERR_DEPENDENT_F;
    case ErrorCode::NotALine: return INST_ERR_NOT_A_LINE;
    case ErrorCode::TimeBudgetExceeded: return INST_ERR_TIME_BUDGET;
  }
  return INST_ERR_INTERNAL;
}

template <class Fn>
inst_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return INST_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return map(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return INST_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return INST_ERR_INTERNAL;
  }
}

inst_status null_pointer() {
  last_error = "null pointer argument";
  return INST_ERR_NULL_POINTER;
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* inst_version(void) { return kToolVersion; }

const char* inst_status_name(inst_status s) {
  switch (s) {
    case INST_OK: return "ok";
    case INST_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case INST_ERR_PARSE: return "parse";
    case INST_ERR_RANK_DEFICIENT: return "rank-deficient";
    case INST_ERR_ZERO_FUNCTIONAL: return "zero-functional";
    case INST_ERR_NEGATIVE_RESULT: return "negative-result";
    case INST_ERR_RANK_DROP_ON_SUBSPACE: return "rank-drop-on-subspace";
    case INST_ERR_DEGENERATE_LINE: return "degenerate-line";
    case INST_ERR_FIELD_TOO_SMALL: return "field-too-small";
    case INST_ERR_RETRY_LIMIT: return "retry-limit";
    case INST_ERR_DEPENDENT_F: return "dependent-f";
    case INST_ERR_NOT_A_LINE: return "not-a-line";
    case INST_ERR_TIME_BUDGET: return "time-budget-exceeded";
    case INST_ERR_NULL_POINTER: return "null-pointer";
    case INST_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* inst_last_error(void) { return last_error.c_str(); }

void inst_string_free(char* s) { delete[] s; }

inst_status inst_config_new(inst_config** out) {
  if (!out) return null_pointer();
  return guarded([&] { *out = new inst_config(); });
}

void inst_config_free(inst_config* c) { delete c; }

inst_status inst_config_set_instance(inst_config* c, unsigned n, unsigned k) {
  if (!c) return null_pointer();
  return guarded([&] {
    if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
    c->options.n = n;
    c->options.k = k;
  });
}

inst_status inst_config_set_prime(inst_config* c, uint32_t prime) {
  if (!c) return null_pointer();
  return guarded([&] {
    PrimeField check(prime);  // throws on a non-prime
    c->options.prime = prime;
  });
}

inst_status inst_config_set_seed(inst_config* c, uint64_t seed) {
  if (!c) return null_pointer();
  c->options.seed = seed;
  return INST_OK;
}

inst_status inst_config_set_trials(inst_config* c, int trials) {
  if (!c) return null_pointer();
  return guarded([&] {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    c->options.trials = trials;
  });
}

inst_status inst_config_set_budget(inst_config* c, double seconds) {
  if (!c) return null_pointer();
  return guarded([&] {
    if (!(seconds > 0)) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
    c->options.budget_s = seconds;
  });
}

inst_status inst_config_set_input_json(inst_config* c, const char* text) {
  if (!c) return null_pointer();
  return guarded([&] {
    if (!text) {
      c->options.input.reset();
      return;
    }
    c->options.input = parse_json(text);
  });
}

inst_status inst_run_suite(const inst_config* c, inst_suite suite, inst_report** out) {
  if (!c || !out) return null_pointer();
  return guarded([&] {
    VerificationReport r;
    switch (suite) {
      case INST_SUITE_THOOFT_VERIFY: r = thooft_verify(c->options); break;
      case INST_SUITE_THOOFT_OTTAVIANI: r = thooft_ottaviani(c->options); break;
      case INST_SUITE_RS_VERIFY: r = rs_verify(c->options); break;
      case INST_SUITE_RS_EPSILON: r = rs_epsilon(c->options); break;
      case INST_SUITE_REPORT: r = moduli_report(c->options); break;
      case INST_SUITE_SPLITTING: r = splitting_survey(c->options); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown suite");
    }
    *out = new inst_report{std::move(r)};
  });
}

int inst_report_passed(const inst_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t inst_report_check_count(const inst_report* r) { return r ? r->report.checks.size() : 0; }

inst_status inst_report_render_json(const inst_report* r, int timings, char** out) {
  if (!r || !out) return null_pointer();
  return guarded([&] { *out = duplicate(render_json(r->report, timings != 0)); });
}

inst_status inst_report_render_markdown(const inst_report* r, int timings, char** out) {
  if (!r || !out) return null_pointer();
  return guarded([&] { *out = duplicate(render_markdown(r->report, timings != 0)); });
}

void inst_report_free(inst_report* r) { delete r; }

inst_status inst_monad_from_json(uint32_t prime, inst_datum_kind kind, const char* text, inst_monad** out) {
  if (!text || !out) return null_pointer();
  return guarded([&] {
    PrimeField f(prime);
    json j = parse_json(text);
    LinearFormMatrix A;
    switch (kind) {
      case INST_DATUM_MONAD: A = monad_from_json(f, j); break;
      case INST_DATUM_THOOFT: A = build_thooft(f, thooft_from_json(f, j)); break;
      case INST_DATUM_RS: A = build_rs(f, rs_from_json(f, j)); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown datum kind");
    }
    *out = new inst_monad{f, std::move(A)};
  });
}

void inst_monad_free(inst_monad* m) { delete m; }

inst_status inst_monad_shape(const inst_monad* m, size_t* n, size_t* k) {
  if (!m || !n || !k) return null_pointer();
  *n = m->A.n;
  *k = m->A.k;
  return INST_OK;
}

inst_status inst_monad_is_symplectic(const inst_monad* m, int* out) {
  if (!m || !out) return null_pointer();
  return guarded([&] { *out = symplectic_check(m->field, m->A) ? 1 : 0; });
}

inst_status inst_monad_syzygy_dim(const inst_monad* m, unsigned degree, size_t* out) {
  if (!m || !out) return null_pointer();
  return guarded([&] { *out = syzygy_dim(m->field, m->A, degree); });
}

inst_status inst_monad_h0_twist(const inst_monad* m, unsigned degree, int trials, uint64_t seed, size_t* out) {
  if (!m || !out) return null_pointer();
  return guarded([&] {
    auto M = make_presentation(m->field, m->A, trials, seed);
    *out = h0_twist(m->field, M, degree);
  });
}

inst_status inst_monad_to_json(const inst_monad* m, char** out) {
  if (!m || !out) return null_pointer();
  return guarded([&] { *out = duplicate(to_json(m->A).dump()); });
}

}  // extern "C"
