#include "tailcut/gamma_solver.hpp"

#include <algorithm>
#include <string>

#include "tailcut/combinatorics.hpp"
#include "tailcut/errors.hpp"
#include "tailcut/series.hpp"

namespace tailcut {

namespace {

// |x| <= 10^(8-P) * reference in real kind, x == 0 in exact kind.
bool negligible(const Scalar& x, const Scalar& reference) {
  if (x.is_exact()) return x.is_zero();
  const Scalar bound = abs(reference) * pow(Scalar::from_int(10, x.kind()), 8L - x.kind().digits());
  return abs(x) <= bound;
}

Scalar max_abs(const std::vector<Scalar>& xs, Kind kind) {
  Scalar m = Scalar::zero(kind);
  for (const auto& x : xs) m = std::max(m, abs(x));
  return m;
}

// (s)_k extended to k = -1 by (s)_{-1} = 1/(s-1).
Scalar shifted_pochhammer(const Scalar& s, int k) {
  if (k == -1) return Scalar::one(s.kind()) / (s - 1);
  return pochhammer(s, k);
}

}  // namespace

ResidualSystem build_system(const FamilySpec& f, int m) {
  if (m < 0) throw DomainError("expansion order m must be nonnegative");
  const Kind kind = f.kind();
  const int order = m + 1;
  const ResidualOperators ops = residual_operators(f, order);

  std::vector<Scalar> phi_coeffs(order + 1, Scalar::zero(kind));
  for (int k = 1; k <= order; ++k) phi_coeffs[k] = Scalar::from_int(k % 2 == 1 ? 1 : -1, kind);
  const LaurentSeries phi(0, std::move(phi_coeffs));

  ResidualSystem system;
  system.m = m;
  system.matrix.assign(m + 1, std::vector<Scalar>(m + 1, Scalar::zero(kind)));
  system.rhs.assign(m + 1, Scalar::zero(kind));
  system.rhs[0] = Scalar::one(kind);

  LaurentSeries phi_power = LaurentSeries::constant(Scalar::one(kind), order);
  // Column m+1 is assembled only to assert that gamma_{m+1} never enters rows 0..m.
  for (int mu = 0; mu <= m + 1; ++mu) {
    const LaurentSeries column = ops.U * LaurentSeries::monomial(mu, kind, order) + ops.V * phi_power;
    if (column.order() < m) throw InvariantViolation("residual column not determined through eps^m");
    if (column.base_order() < 0 && !negligible(column.coefficient(-1), Scalar::one(kind))) {
      throw InvariantViolation("eps^-1 row of the residual system does not vanish");
    }
    for (int j = 0; j <= m; ++j) {
      const Scalar& entry = column.coefficient(j);
      if (mu > j) {
        if (!negligible(entry, Scalar::one(kind))) {
          throw InvariantViolation("residual system is not lower triangular (row " + std::to_string(j) +
                                   ", column " + std::to_string(mu) + ")");
        }
      } else {
        system.matrix[j][mu] = entry;
      }
    }
    phi_power = phi_power * phi;
  }
  return system;
}

GammaVector solve_gamma(const FamilySpec& f, int m) {
  const ResidualSystem system = build_system(f, m);
  const Kind kind = f.kind();
  std::vector<Scalar> gamma;
  gamma.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    Scalar acc = system.rhs[j];
    for (int mu = 0; mu < j; ++mu) acc -= system.matrix[j][mu] * gamma[mu];
    const Scalar& pivot = system.matrix[j][j];
    if (negligible(pivot, max_abs(system.matrix[j], kind))) {
      const std::string param = f.pivot_parameter();
      const Scalar& value = param == "s" ? f.s() : f.z();
      throw DegenerateParameter(param, "pivot degenerate at " + param + "=" +
                                           (value.is_exact() ? value.str() : value.str(17)) +
                                           " (equation " + std::to_string(j) + ")");
    }
    gamma.push_back(acc / pivot);
  }

  GammaVector result{f, m, std::move(gamma)};
  const auto residual = residual_coefficients(f, result);
  const Scalar reference = Scalar::one(kind) + max_abs(result.coeffs, kind);
  for (std::size_t j = 0; j < residual.size(); ++j) {
    if (!negligible(residual[j], reference)) {
      throw InvariantViolation("residual check failed at eps^" + std::to_string(j));
    }
  }
  return result;
}

std::vector<Scalar> residual_coefficients(const FamilySpec& f, const GammaVector& g) {
  const int order = g.m + 1;
  const Kind kind = g.kind();
  const ResidualOperators ops = residual_operators(f, order);
  // The ansatz is a polynomial, so gamma_{m+1} = 0 is exact.
  std::vector<Scalar> padded = g.coeffs;
  padded.push_back(Scalar::zero(kind));
  const LaurentSeries S(0, std::move(padded));
  const LaurentSeries lhs = ops.U * S + ops.V * shift_substitute(S, order);
  const LaurentSeries residual = lhs - LaurentSeries::constant(Scalar::one(kind), order);
  std::vector<Scalar> out;
  out.reserve(g.m + 1);
  for (int j = 0; j <= g.m; ++j) out.push_back(residual.coefficient(j));
  return out;
}

Scalar residual_defect(const FamilySpec& f, const GammaVector& g, long n, std::optional<Kind> kind) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const Kind k = kind.value_or(natural_kind(f));
  auto approximant = [&](long idx) {
    const Scalar eps = Scalar::one(k) / Scalar::from_int(idx + f.alpha(), k);
    Scalar acc = g.coeffs.back().to(k);
    for (int mu = g.m - 1; mu >= 0; --mu) acc = acc * eps + g.coeffs[mu].to(k);
    return scale_at(f, idx, k) * acc;
  };
  return (approximant(n + 1) - approximant(n)) / term(f, n + 1, k) - 1;
}

std::vector<Scalar> zeta_betas(const GammaVector& g) {
  if (g.family.id() != FamilyId::zeta) throw DomainError("zeta_betas needs a zeta-family GammaVector");
  const Scalar& s = g.family.s();
  std::vector<Scalar> betas;
  betas.reserve(g.m + 1);
  for (int mu = 0; mu <= g.m; ++mu) {
    const Scalar poch = shifted_pochhammer(s, mu - 1);
    if (poch.is_zero()) throw DomainError("beta undefined: (s)_{mu-1} vanishes");
    const Scalar fact = Scalar(mpq_class(factorial(mu))).to(g.kind());
    const Scalar sign = Scalar::from_int(mu % 2 == 0 ? -1 : 1, g.kind());
    betas.push_back(sign * g.coeffs[mu] * fact / poch);
  }
  return betas;
}

}  // namespace tailcut
