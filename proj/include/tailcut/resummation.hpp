#pragma once

// Three evaluations of the remainder approximant: truncated inverse-power
// series, factorial series, and Pade approximant in eps = 1/(n + alpha).

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tailcut/families.hpp"
#include "tailcut/gamma_solver.hpp"
#include "tailcut/scalar.hpp"

namespace tailcut {

struct FactorialGamma {
  std::vector<Scalar> coeffs;
  GammaVector source;
};

/// [L/M] rational function p(eps)/q(eps) with q_0 = 1.
class PadeApproximant {
 public:
  PadeApproximant(int L, int M, std::vector<Scalar> p, std::vector<Scalar> q);

  int L() const noexcept { return L_; }
  int M() const noexcept { return M_; }
  const std::vector<Scalar>& numerator() const noexcept { return p_; }
  const std::vector<Scalar>& denominator() const noexcept { return q_; }

  /// p(eps)/q(eps); PoleError when q(eps) = 0.
  Scalar evaluate(const Scalar& eps) const;

 private:
  int L_;
  int M_;
  std::vector<Scalar> p_;
  std::vector<Scalar> q_;
};

struct PowerMethod {};
struct FactorialMethod {};
struct PadeMethod {
  int L = 0;
  int M = 0;
};
using Method = std::variant<PowerMethod, FactorialMethod, PadeMethod>;

/// "power", "factorial" or "pade[L/M]".
std::string method_name(const Method& method);

/// scale(n) * sum_mu gamma_mu / (n+alpha)^mu
Scalar remainder_power(const FamilySpec& f, const GammaVector& g, long n,
                       std::optional<Kind> kind = std::nullopt);

/// gamma~_0 = gamma_0, gamma~_1 = gamma_1,
/// gamma~_mu = sum_{v=1}^{mu} (-1)^(mu+v) S1(mu-1, v-1) gamma_v  (mu >= 2).
FactorialGamma gamma_to_factorial(const GammaVector& g);

/// scale(n) * sum_mu gamma~_mu / (n+alpha)_mu
Scalar remainder_factorial(const FamilySpec& f, const FactorialGamma& fg, long n,
                           std::optional<Kind> kind = std::nullopt);

/// [L/M] approximant matching coeffs through eps^(L+M). The denominator is
/// solved from the M x M Toeplitz system; a singular system raises DegeneratePade.
PadeApproximant pade_from_series(std::span<const Scalar> coeffs, int L, int M);

/// scale(n) * [L/M](1/(n+alpha)) built from g (requires L + M <= m).
Scalar remainder_pade(const FamilySpec& f, const GammaVector& g, long n, int L, int M,
                      std::optional<Kind> kind = std::nullopt);

/// Remainder approximant by the chosen method.
Scalar remainder_by(const FamilySpec& f, const GammaVector& g, long n, const Method& method,
                    std::optional<Kind> kind = std::nullopt);

/// partial_sum(n) - remainder approximant (since s_n = s + r_n).
Scalar corrected_sum(const FamilySpec& f, long n, int m, const Method& method,
                     std::optional<Kind> kind = std::nullopt);

}  // namespace tailcut
