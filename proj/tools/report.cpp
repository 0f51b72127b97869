#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <thread>

#include "json.hpp"

#include "tailcut/errors.hpp"
#include "tailcut/gamma_solver.hpp"
#include "tailcut/oracle.hpp"

namespace tailcut::cli {

namespace {

constexpr int kOracleExtraDigits = 30;

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds_text(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

}  // namespace

std::vector<ReportRow> compute_rows(const Request& req) {
  const FamilySpec family = build_family(req);
  const std::vector<long> indices = index_list(req);
  const std::vector<Method> methods = method_list(req);
  const Kind kind = Kind::real(req.precision);
  const int digits = req.precision;
  const GammaVector gamma = solve_gamma(family, req.m);
  OracleConfig ocfg;
  ocfg.digits = req.precision + kOracleExtraDigits;

  std::vector<ReportRow> rows(indices.size() * methods.size());
  std::vector<std::exception_ptr> oracle_errors(indices.size());

  auto work = [&](std::size_t i) {
    const long n = indices[i];
    std::optional<Scalar> oracle;
    std::string oracle_error;
    try {
      oracle = remainder_exact(family, n, ocfg);
    } catch (const OracleFailure&) {
      oracle_errors[i] = std::current_exception();
    } catch (const Error& e) {
      oracle_error = e.what();
    }
    const Scalar partial = partial_sum(family, n, kind);
    for (std::size_t j = 0; j < methods.size(); ++j) {
      ReportRow& row = rows[i * methods.size() + j];
      row.family = family.name();
      row.params = family.describe();
      row.n = n;
      row.m = req.m;
      row.method = method_name(methods[j]);
      const auto start = std::chrono::steady_clock::now();
      try {
        const Scalar approx = remainder_by(family, gamma, n, methods[j], kind);
        row.approx = approx.str(digits);
        row.corrected = (partial - approx).str(digits);
        if (oracle) {
          const Scalar reference = oracle->to(Kind::real(ocfg.digits));
          const Scalar err = abs(approx.to(reference.kind()) - reference);
          row.oracle = reference.str(digits);
          row.abs_err = err.str(digits);
          row.rel_err = reference.is_zero() ? "inf" : (err / abs(reference)).str(digits);
        } else if (!oracle_error.empty()) {
          row.error = "oracle: " + oracle_error;
        } else {
          row.error = "oracle failure";
        }
      } catch (const Error& e) {
        row.error = e.what();
      }
      if (req.timing) {
        row.seconds = seconds_text(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(req.jobs, static_cast<int>(indices.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < indices.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> thread_errors(jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < indices.size(); i = next++) work(i);
        } catch (...) {
          thread_errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : thread_errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (const auto& e : oracle_errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_rows(std::ostream& os, const std::vector<ReportRow>& rows, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["family"] = r.family;
        obj["params"] = r.params;
        obj["n"] = r.n;
        obj["m"] = r.m;
        obj["method"] = r.method;
        obj["approx"] = r.approx;
        obj["oracle"] = r.oracle;
        obj["corrected"] = r.corrected;
        obj["abs_err"] = r.abs_err;
        obj["rel_err"] = r.rel_err;
        obj["seconds"] = r.seconds;
        obj["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
        out.push_back(std::move(obj));
      }
      os << out.dump(2) << "\n";
      return;
    }
    case Format::csv:
      os << "family,params,n,m,method,approx,oracle,corrected,abs_err,rel_err,seconds\n";
      for (const auto& r : rows) {
        os << csv_field(r.family) << ',' << csv_field(r.params) << ',' << r.n << ',' << r.m << ','
           << csv_field(r.method) << ',' << r.approx << ',' << r.oracle << ',' << r.corrected << ','
           << r.abs_err << ',' << r.rel_err << ',' << r.seconds << "\n";
      }
      return;
    case Format::text:
      for (const auto& r : rows) {
        os << r.family << " " << r.params << "  n=" << r.n << " m=" << r.m << " " << r.method << "\n";
        if (r.error) {
          os << "  error     " << *r.error << "\n";
          continue;
        }
        os << "  approx    " << r.approx << "\n"
           << "  oracle    " << r.oracle << "\n"
           << "  corrected " << r.corrected << "\n"
           << "  abs_err   " << r.abs_err << "\n"
           << "  rel_err   " << r.rel_err << "\n";
        if (r.seconds != "0") os << "  seconds   " << r.seconds << "\n";
      }
      return;
  }
}

void write_coeffs(std::ostream& os, const Request& req) {
  const FamilySpec family = build_family(req);
  const GammaVector gamma = solve_gamma(family, req.m);
  std::optional<FactorialGamma> tilde;
  if (req.factorial) tilde = gamma_to_factorial(gamma);
  auto text = [&](const Scalar& x) { return x.is_exact() ? x.str() : x.str(req.precision); };

  switch (req.format) {
    case Format::json: {
      nlohmann::ordered_json out;
      out["family"] = family.name();
      out["params"] = family.describe();
      out["m"] = req.m;
      out["mode"] = family.kind().is_exact() ? "exact" : "real";
      auto& g = out["gamma"] = nlohmann::ordered_json::array();
      for (const auto& c : gamma.coeffs) g.push_back(text(c));
      if (tilde) {
        auto& t = out["gamma_factorial"] = nlohmann::ordered_json::array();
        for (const auto& c : tilde->coeffs) t.push_back(text(c));
      }
      os << out.dump(2) << "\n";
      return;
    }
    case Format::csv:
      os << (tilde ? "mu,gamma,gamma_factorial\n" : "mu,gamma\n");
      for (int mu = 0; mu <= req.m; ++mu) {
        os << mu << ',' << text(gamma.coeffs[mu]);
        if (tilde) os << ',' << text(tilde->coeffs[mu]);
        os << "\n";
      }
      return;
    case Format::text:
      os << "# " << family.name() << " " << family.describe() << " m=" << req.m << "\n";
      for (int mu = 0; mu <= req.m; ++mu) {
        os << "gamma[" << mu << "] = " << text(gamma.coeffs[mu]) << "\n";
      }
      if (tilde) {
        for (int mu = 0; mu <= req.m; ++mu) {
          os << "gamma~[" << mu << "] = " << text(tilde->coeffs[mu]) << "\n";
        }
      }
      return;
  }
}

}  // namespace tailcut::cli
