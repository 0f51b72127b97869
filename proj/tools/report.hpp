#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "request.hpp"

namespace tailcut::cli {

struct ReportRow {
  std::string family;
  std::string params;
  long n = 0;
  int m = 0;
  std::string method;
  std::string approx;
  std::string oracle;
  std::string corrected;
  std::string abs_err;
  std::string rel_err;
  std::string seconds = "0";
  std::optional<std::string> error;
};

/// One row per (n, method), ascending n then method order. Rows are computed
/// on req.jobs threads; the order never depends on scheduling.
std::vector<ReportRow> compute_rows(const Request& req);

void write_rows(std::ostream& os, const std::vector<ReportRow>& rows, Format format);

/// Gamma (and optionally factorial gamma) listing.
void write_coeffs(std::ostream& os, const Request& req);

}  // namespace tailcut::cli
