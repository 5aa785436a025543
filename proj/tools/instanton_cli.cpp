#include <cstdio>
#include <memory>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "instanton.h"

namespace {

struct Options {
  unsigned n = 1;
  unsigned k = 3;
  std::uint32_t prime = 2147483647u;
  std::uint64_t seed = 1;
  int trials = 50;
  double budget_s = 120;
  std::string format = "json";
  std::string input;
  std::string output;
  bool timings = false;
};

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

int exit_for(inst_status s) {
  switch (s) {
    case INST_ERR_TIME_BUDGET: return kBudget;
    case INST_ERR_INVALID_ARGUMENT:
    case INST_ERR_PARSE:
    case INST_ERR_FIELD_TOO_SMALL:
    case INST_ERR_NULL_POINTER: return kUsage;
    default: return kFail;
  }
}

int report_error(inst_status s) {
  std::cerr << "error (" << inst_status_name(s) << "): " << inst_last_error() << "\n";
  return exit_for(s);
}

int run(const Options& o, inst_suite suite) {
  inst_config* cfg = nullptr;
  inst_status s = inst_config_new(&cfg);
  if (s != INST_OK) return report_error(s);
  std::unique_ptr<inst_config, void (*)(inst_config*)> guard(cfg, inst_config_free);

  for (inst_status step : {inst_config_set_instance(cfg, o.n, o.k), inst_config_set_prime(cfg, o.prime),
                           inst_config_set_seed(cfg, o.seed), inst_config_set_trials(cfg, o.trials),
                           inst_config_set_budget(cfg, o.budget_s)}) {
    if (step != INST_OK) return report_error(step);
  }
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) {
      std::cerr << "error: cannot read " << o.input << "\n";
      return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if ((s = inst_config_set_input_json(cfg, buf.str().c_str())) != INST_OK) return report_error(s);
  }

  inst_report* rep = nullptr;
  if ((s = inst_run_suite(cfg, suite, &rep)) != INST_OK) return report_error(s);
  std::unique_ptr<inst_report, void (*)(inst_report*)> rguard(rep, inst_report_free);

  char* text = nullptr;
  s = o.format == "md" ? inst_report_render_markdown(rep, o.timings, &text)
                       : inst_report_render_json(rep, o.timings, &text);
  if (s != INST_OK) return report_error(s);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    out << text;
  }
  inst_string_free(text);
  return inst_report_passed(rep) ? kPass : kFail;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "half the projective dimension minus one: P^{2n+1}")->check(CLI::PositiveNumber);
  app->add_option("--k", o.k, "charge")->check(CLI::PositiveNumber);
  app->add_option("--prime", o.prime, "field modulus");
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--trials", o.trials, "sample count")->check(CLI::PositiveNumber);
  app->add_option("--budget-s", o.budget_s, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
  app->add_option("--input", o.input, "datum file (JSON)");
  app->add_option("-o,--output", o.output, "write the report here instead of stdout");
  app->add_flag("--timings", o.timings, "include per-check runtimes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of symplectic instanton monads over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(inst_version()));
  Options o;
  inst_suite suite = INST_SUITE_REPORT;

  auto* thooft = app.add_subcommand("thooft", "'t Hooft data");
  thooft->require_subcommand(1);
  auto* tv = thooft->add_subcommand("verify", "invariant suite on witness and random data");
  auto* to = thooft->add_subcommand("ottaviani", "deformation space dimension against (n+k)(6n+3k+1)");
  auto* rs = app.add_subcommand("rs", "persymmetric (F|H) data");
  rs->require_subcommand(1);
  auto* rv = rs->add_subcommand("verify", "invariant suite on random data");
  auto* re = rs->add_subcommand("epsilon", "the eps-family and its syzygies");
  auto* rp = app.add_subcommand("report", "moduli dimensions and birational profile");
  auto* sp = app.add_subcommand("splitting", "splitting types on random lines");

  for (const auto& [cmd, s] : std::initializer_list<std::pair<CLI::App*, inst_suite>>{
           {tv, INST_SUITE_THOOFT_VERIFY},
           {to, INST_SUITE_THOOFT_OTTAVIANI},
           {rv, INST_SUITE_RS_VERIFY},
           {re, INST_SUITE_RS_EPSILON},
           {rp, INST_SUITE_REPORT},
           {sp, INST_SUITE_SPLITTING}}) {
    add_common(cmd, o);
    cmd->callback([&suite, s = s] { suite = s; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return run(o, suite);
}
