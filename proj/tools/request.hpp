#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tailcut/families.hpp"
#include "tailcut/resummation.hpp"

namespace tailcut::cli {

enum class Format { text, json, csv };

struct Request {
  std::string family;
  std::map<std::string, std::string> params;  // flag name -> literal
  std::vector<std::string> alphas;
  std::vector<std::string> betas;
  int m = 0;
  std::optional<long> n;
  std::string n_range;
  std::string method = "all";
  std::optional<int> L;
  std::optional<int> M;
  int precision = kDefaultDigits;
  bool exact = false;
  bool factorial = false;
  bool timing = false;
  int jobs = 1;
  Format format = Format::text;
  std::string out;
};

/// Invalid flags or values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Builds the family from the literal parameters. Fractions and integers
/// select exact mode, decimals select real mode at the requested precision.
FamilySpec build_family(const Request& req);

std::vector<long> index_list(const Request& req);
std::vector<Method> method_list(const Request& req);

}  // namespace tailcut::cli
