#pragma once

// High-precision reference values: series limits, exact truncation errors,
// and the Euler-Maclaurin approximation of the zeta tail.

#include <optional>

#include "tailcut/families.hpp"
#include "tailcut/scalar.hpp"

namespace tailcut {

struct OracleConfig {
  int digits = 80;
  int quadrature_nodes = 40;
  int max_subdivisions = 4000;
  long max_tail_terms = 10'000'000;
};

/// Euler-Maclaurin evaluation of zeta(s), s > 1. Each entry names the number
/// of summed terms n0 + 1 and the number k of Bernoulli corrections.
struct ZetaEvaluation {
  long n0 = 0;
  int k = 0;
  Scalar value;
};

/// zeta(s) from a given n0, with k chosen so the first omitted correction is
/// below 10^(-digits); OracleFailure if the corrections stop decreasing first.
ZetaEvaluation zeta_euler_maclaurin(const Scalar& s, long n0, int digits);

/// zeta(s) at cfg.digits, cross-checked at two distinct (n0, k) pairs.
Scalar zeta_reference(const Scalar& s, const OracleConfig& cfg = {});

/// z e^z E1(z) as the integral of e^-t / (1 + t/z) over [0, inf).
Scalar e1_reference_quadrature(const Scalar& z, const OracleConfig& cfg = {});
/// z e^z E1(z) from E1(z) = -gamma - ln z + sum_{k>=1} (-1)^(k+1) z^k / (k k!).
Scalar e1_reference_series(const Scalar& z, const OracleConfig& cfg = {});
/// Both routes, required to agree to cfg.digits - 10 digits.
Scalar e1_reference(const Scalar& z, const OracleConfig& cfg = {});

/// Euler-Mascheroni constant from the embedded literal (up to 300 digits).
Scalar euler_gamma(int digits);

/// r_n = s_n - s: zeta and E1 through the references above (E1 cross-checked
/// against the integral form of the remainder), 2F1/pFq as the negated tail.
Scalar remainder_exact(const FamilySpec& f, long n, const OracleConfig& cfg = {});

/// sum_{mu=0}^{m} (-1)^(mu-1) (s)_{mu-1} B_mu / mu! (n+2)^(1-s-mu), (s)_{-1} = 1/(s-1).
Scalar euler_maclaurin_zeta_tail(const Scalar& s, long n, int m, std::optional<Kind> kind = std::nullopt);

}  // namespace tailcut
