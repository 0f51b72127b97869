#include "request.hpp"

#include <algorithm>
#include <charconv>

#include "tailcut/errors.hpp"

namespace tailcut::cli {

namespace {

bool is_decimal_literal(const std::string& text) { return text.find_first_of(".eE") != std::string::npos; }
bool is_fraction_literal(const std::string& text) { return text.find('/') != std::string::npos; }

long parse_long(const std::string& text, const std::string& what) {
  long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

}  // namespace

FamilySpec build_family(const Request& req) {
  static const std::map<std::string, std::vector<std::string>> kScalarFlags = {
      {"zeta", {"s"}}, {"2f1", {"a", "b", "c", "z"}}, {"pfq", {"z"}}, {"e1", {"z"}}};
  const auto expected = kScalarFlags.find(req.family);
  if (expected == kScalarFlags.end()) throw UsageError("unknown family '" + req.family + "'");
  for (const auto& [name, _] : req.params) {
    if (std::find(expected->second.begin(), expected->second.end(), name) == expected->second.end()) {
      throw UsageError("--" + name + " does not apply to family " + req.family);
    }
  }
  for (const auto& name : expected->second) {
    if (!req.params.count(name)) throw UsageError("family " + req.family + " needs --" + name);
  }
  const bool lists = !req.alphas.empty() || !req.betas.empty();
  if (req.family == "pfq" && req.alphas.empty()) throw UsageError("family pfq needs --alphas");
  if (req.family != "pfq" && lists) throw UsageError("--alphas/--betas apply to family pfq only");

  std::vector<std::string> literals;
  for (const auto& [_, text] : req.params) literals.push_back(text);
  literals.insert(literals.end(), req.alphas.begin(), req.alphas.end());
  literals.insert(literals.end(), req.betas.begin(), req.betas.end());
  const bool decimal = std::any_of(literals.begin(), literals.end(), is_decimal_literal);
  const bool fraction = std::any_of(literals.begin(), literals.end(), is_fraction_literal);
  if (decimal && fraction) {
    throw UsageError("parameters mix fractions (exact mode) and decimals (real mode)");
  }
  if (decimal && req.exact) throw UsageError("--exact needs fractions or integers, not decimals");
  if (req.precision < kMinDigits) throw UsageError("--precision must be at least " + std::to_string(kMinDigits));
  const Kind kind = decimal ? Kind::real(req.precision) : Kind::exact();

  auto value = [&](const std::string& name) { return Scalar::parse(req.params.at(name), kind); };
  auto values = [&](const std::vector<std::string>& texts) {
    std::vector<Scalar> out;
    for (const auto& t : texts) out.push_back(Scalar::parse(t, kind));
    return out;
  };
  if (req.family == "zeta") return make_zeta(value("s"));
  if (req.family == "2f1") return make_2f1(value("a"), value("b"), value("c"), value("z"));
  if (req.family == "pfq") return make_pfq(values(req.alphas), values(req.betas), value("z"));
  return make_e1(value("z"));
}

std::vector<long> index_list(const Request& req) {
  if (req.n && !req.n_range.empty()) throw UsageError("give either --n or --n-range");
  if (req.n) {
    if (*req.n < 0) throw UsageError("--n must be nonnegative");
    return {*req.n};
  }
  if (req.n_range.empty()) throw UsageError("missing --n or --n-range");
  const auto dots = req.n_range.find("..");
  if (dots == std::string::npos) throw UsageError("--n-range expects a..b");
  const long lo = parse_long(req.n_range.substr(0, dots), "range start");
  const long hi = parse_long(req.n_range.substr(dots + 2), "range end");
  if (lo < 0 || hi < lo) throw UsageError("--n-range must be a nonempty range of nonnegative indices");
  std::vector<long> out;
  for (long n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<Method> method_list(const Request& req) {
  const int L = req.L.value_or(req.m / 2);
  const int M = req.M.value_or(req.m / 2);
  if (L < 0 || M < 0) throw UsageError("Pade degrees must be nonnegative");
  if (L + M > req.m) throw UsageError("Pade degrees need L + M <= m");
  if (req.method == "power") return {PowerMethod{}};
  if (req.method == "factorial") return {FactorialMethod{}};
  if (req.method == "pade") return {PadeMethod{L, M}};
  if (req.method == "all") return {PowerMethod{}, FactorialMethod{}, PadeMethod{L, M}};
  throw UsageError("unknown method '" + req.method + "'");
}

}  // namespace tailcut::cli
