#pragma once

// Triangular linear system for the coefficients gamma_0..gamma_m of the
// remainder ansatz r_n ~ scale(n) * sum_mu gamma_mu / (n + alpha)^mu.

#include <optional>
#include <vector>

#include "tailcut/families.hpp"
#include "tailcut/scalar.hpp"

namespace tailcut {

/// Equation rows j = 0..m; entry[j][mu] is the eps^j coefficient of
/// U eps^mu + V phi^mu with phi = eps/(1+eps).
struct ResidualSystem {
  int m = 0;
  std::vector<std::vector<Scalar>> matrix;
  std::vector<Scalar> rhs;
};

struct GammaVector {
  FamilySpec family;
  int m = 0;
  std::vector<Scalar> coeffs;

  Kind kind() const { return coeffs.front().kind(); }
};

ResidualSystem build_system(const FamilySpec& f, int m);

/// Forward substitution on build_system(f, m). Verifies the residual identity
/// through eps^m before returning; a vanishing pivot raises DegenerateParameter.
GammaVector solve_gamma(const FamilySpec& f, int m);

/// Coefficients of eps^0..eps^m of U S + V S(phi) - 1, computed with series
/// arithmetic independently of the assembled matrix.
std::vector<Scalar> residual_coefficients(const FamilySpec& f, const GammaVector& g);

/// (r_{n+1} - r_n) / a_{n+1} - 1 for the approximant r_n = scale(n) S(1/(n+alpha)).
Scalar residual_defect(const FamilySpec& f, const GammaVector& g, long n,
                       std::optional<Kind> kind = std::nullopt);

/// For the zeta family: beta_mu defined by gamma_mu = -(-1)^mu (s)_{mu-1} beta_mu / mu!
/// (the sign accounts for the remainder convention). beta_mu equals B_mu.
std::vector<Scalar> zeta_betas(const GammaVector& g);

}  // namespace tailcut
