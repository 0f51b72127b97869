#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "request.hpp"

namespace tailcut::cli {

struct CheckOutcome {
  std::string suite;
  bool pass = false;
  std::string detail;
};

struct CheckOptions {
  std::string suite;  // bernoulli | order | pade | pade22 | oracle | all
  int max = 20;
  Request request;    // family selection for order / pade22
  bool has_family = false;
};

std::vector<CheckOutcome> run_checks(const CheckOptions& opts);

/// Least-squares slope of log|defect(n)| against log(n + alpha) over [lo, hi].
double defect_slope(const FamilySpec& f, int m, long lo, long hi);

}  // namespace tailcut::cli
