#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "report.hpp"
#include "tailcut/errors.hpp"

using namespace tailcut;
using namespace tailcut::cli;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kOracle = 3, kInternal = 4 };

void add_family_options(CLI::App* cmd, Request& req, bool family_required) {
  auto* family = cmd->add_option("--family", req.family, "zeta | 2f1 | pfq | e1")
                     ->check(CLI::IsMember({"zeta", "2f1", "pfq", "e1"}));
  if (family_required) family->required();
  for (const char* name : {"s", "a", "b", "c", "z"}) {
    cmd->add_option_function<std::string>(std::string("--") + name,
                                          [&req, name](const std::string& v) { req.params[name] = v; },
                                          "parameter (fraction = exact, decimal = real)")
        ->allow_extra_args(false);
  }
  cmd->add_option("--alphas", req.alphas, "pFq numerator parameters")->delimiter(',');
  cmd->add_option("--betas", req.betas, "pFq denominator parameters")->delimiter(',');
  cmd->add_option("--precision", req.precision, "working precision in decimal digits");
  cmd->add_flag("--exact", req.exact, "require exact rational mode");
  cmd->add_option("--format", req.format, "text | json | csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
  cmd->add_option("--out", req.out, "write output to a file");
}

void add_run_options(CLI::App* cmd, Request& req) {
  cmd->add_option("--m", req.m, "expansion order")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", req.n, "index n");
  cmd->add_option("--n-range", req.n_range, "index range a..b");
  cmd->add_option("--method", req.method, "power | factorial | pade | all")
      ->check(CLI::IsMember({"power", "factorial", "pade", "all"}));
  cmd->add_option("--L", req.L, "Pade numerator degree (default m/2)");
  cmd->add_option("--M", req.M, "Pade denominator degree (default m/2)");
  cmd->add_flag("--timing", req.timing, "report wall time per row");
  cmd->add_option("--jobs", req.jobs, "worker threads for independent rows")->check(CLI::PositiveNumber);
}

template <class Fn>
int emit(const Request& req, Fn&& write) {
  if (req.out.empty()) {
    write(std::cout);
    return kOk;
  }
  std::ofstream file(req.out);
  if (!file) throw UsageError("cannot open " + req.out);
  write(file);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncation-error approximants for series of special functions"};
  app.require_subcommand(1);

  Request coeffs_req, approx_req, table_req, check_req;
  CheckOptions check_opts;

  auto* coeffs = app.add_subcommand("coeffs", "solve the gamma coefficients of the remainder ansatz");
  add_family_options(coeffs, coeffs_req, true);
  coeffs->add_option("--m", coeffs_req.m, "expansion order")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_flag("--factorial", coeffs_req.factorial, "also list the factorial-series coefficients");

  auto* approx = app.add_subcommand("approx", "remainder approximants compared with the oracle");
  add_family_options(approx, approx_req, true);
  add_run_options(approx, approx_req);

  auto* table = app.add_subcommand("table", "sweep over an index range");
  add_family_options(table, table_req, true);
  add_run_options(table, table_req);
  table_req.format = Format::csv;

  auto* check = app.add_subcommand("check", "run validation suites");
  check->add_option("suite", check_opts.suite, "bernoulli | order | pade | pade22 | oracle | all")
      ->check(CLI::IsMember({"bernoulli", "order", "pade", "pade22", "oracle", "all"}));
  check_opts.suite = "all";
  add_family_options(check, check_req, false);
  check->add_option("--m", check_req.m, "expansion order for the order suite");
  check->add_option("--max", check_opts.max, "highest Bernoulli index")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*coeffs) {
      return emit(coeffs_req, [&](std::ostream& os) { write_coeffs(os, coeffs_req); });
    }
    if (*approx || *table) {
      const Request& req = *approx ? approx_req : table_req;
      const auto rows = compute_rows(req);
      emit(req, [&](std::ostream& os) { write_rows(os, rows, req.format); });
      for (const auto& row : rows) {
        if (row.error) {
          std::cerr << "row n=" << row.n << " " << row.method << ": " << *row.error << "\n";
        }
      }
      const bool failed = std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.error.has_value(); });
      return failed ? kInvalid : kOk;
    }
    check_opts.request = check_req;
    check_opts.has_family = !check_req.family.empty();
    const auto outcomes = run_checks(check_opts);
    bool pass = true;
    std::ostringstream text;
    for (const auto& o : outcomes) {
      text << (o.pass ? "PASS " : "FAIL ") << o.suite << ":" << o.detail << "\n";
      pass = pass && o.pass;
    }
    emit(check_req, [&](std::ostream& os) { os << text.str(); });
    return pass ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const OracleFailure& e) {
    std::cerr << "oracle failure: " << e.what() << "\n";
    return kOracle;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
