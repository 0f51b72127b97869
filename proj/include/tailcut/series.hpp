#pragma once

// Truncated Laurent series in the expansion variable eps = 1/(n + alpha).
//
// A series carries coefficients of eps^base .. eps^M with base in {-1, 0}.
// Coefficients beyond M are unknown, never zero: every operation reports
// the highest order at which its result is fully determined.

#include <span>
#include <vector>

#include "tailcut/scalar.hpp"

namespace tailcut {

class LaurentSeries {
 public:
  /// Coefficients for eps^base_order, eps^(base_order+1), ...; M = base_order + size - 1.
  LaurentSeries(int base_order, std::vector<Scalar> coeffs);

  static LaurentSeries zero(Kind kind, int order);
  static LaurentSeries constant(const Scalar& c, int order);
  /// eps^power truncated at `order` (power in {-1, ..., order}).
  static LaurentSeries monomial(int power, Kind kind, int order);

  int base_order() const noexcept { return base_order_; }
  int order() const noexcept { return base_order_ + static_cast<int>(coeffs_.size()) - 1; }
  Kind kind() const noexcept { return kind_; }
  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of eps^k; throws DomainError outside [base_order, order].
  const Scalar& coefficient(int k) const;

  /// Drops coefficients above `order` (which must not exceed the current order).
  LaurentSeries truncated(int order) const;
  /// Same series re-expressed with base order -1 (prepends a zero coefficient).
  LaurentSeries with_base(int base_order) const;

  LaurentSeries operator-() const;

 private:
  int base_order_;
  Kind kind_;
  std::vector<Scalar> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y);
/// Cauchy product, determined through order min(Mx + base_y, My + base_x).
LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries operator*(const Scalar& c, const LaurentSeries& x);

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y);
LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y);
/// q with q * den == num through the result order. den must have base 0 and
/// a nonzero constant term.
LaurentSeries series_div(const LaurentSeries& num, const LaurentSeries& den);

/// (1 + eps)^exponent through eps^order.
LaurentSeries binomial_series(const Scalar& exponent, int order);

/// S(eps / (1 + eps)) through eps^order; S must have base order 0.
LaurentSeries shift_substitute(const LaurentSeries& s, int order);

/// Horner evaluation at eps = eps0 in the kind of eps0.
Scalar series_evaluate(const LaurentSeries& s, const Scalar& eps0);

/// Free-function alias of LaurentSeries::coefficient.
const Scalar& coefficient_at(const LaurentSeries& s, int k);

}  // namespace tailcut
