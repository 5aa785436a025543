#include "instanton/report.hpp"

#include <algorithm>
#include <sstream>

namespace instanton {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Evidence: return "evidence";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

json to_json(const VerificationReport& r, bool timings) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"id", c.id},
              {"citation", c.citation},
              {"status", to_string(c.status)},
              {"expected", c.expected},
              {"observed", c.observed}};
    if (c.witness) j["witness"] = *c.witness;
    if (timings) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  json out = {{"schema", kSchemaVersion},
              {"tool", {{"name", "instanton-verify"}, {"version", kToolVersion}}},
              {"command", r.command},
              {"field", {{"prime", r.prime}, {"seed", r.seed}}},
              {"instance", {{"n", r.n}, {"k", r.k}}},
              {"checks", checks},
              {"verdict", r.passed() ? "pass" : "fail"}};
  if (r.extra) out["extra"] = *r.extra;
  return out;
}

std::string render_json(const VerificationReport& r, bool timings) { return to_json(r, timings).dump(2) + "\n"; }

namespace {
std::string cell(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}
}  // namespace

std::string render_markdown(const VerificationReport& r, bool timings) {
  std::ostringstream os;
  os << "# " << r.command << " (n = " << r.n << ", k = " << r.k << ")\n\n";
  os << "- prime: " << r.prime << "\n- seed: " << r.seed << "\n- schema: " << kSchemaVersion
     << "\n- verdict: **" << (r.passed() ? "pass" : "fail") << "**\n\n";
  os << "| id | status | expected | observed | claim |" << (timings ? " ms |" : "") << "\n";
  os << "|---|---|---|---|---|" << (timings ? "---|" : "") << "\n";
  for (const auto& c : r.checks) {
    os << "| " << c.id << " | " << to_string(c.status) << " | " << cell(c.expected) << " | " << cell(c.observed)
       << " | " << cell(json(c.citation)) << " |";
    if (timings) os << " " << static_cast<long long>(c.runtime_ms) << " |";
    os << "\n";
  }
  bool any_witness = false;
  for (const auto& c : r.checks) {
    if (!c.witness) continue;
    if (!any_witness) os << "\n## Witnesses\n";
    any_witness = true;
    os << "\n### " << c.id << "\n\n```json\n" << c.witness->dump() << "\n```\n";
  }
  if (r.extra) os << "\n## Details\n\n```json\n" << r.extra->dump(2) << "\n```\n";
  return os.str();
}

}  // namespace instanton
