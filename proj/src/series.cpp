#include "tailcut/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tailcut/errors.hpp"

namespace tailcut {

namespace {

void check_same_kind(const LaurentSeries& x, const LaurentSeries& y) {
  if (x.kind().is_exact() != y.kind().is_exact()) {
    throw KindMismatch("series arithmetic between exact and real coefficients");
  }
}

Kind wider(Kind a, Kind b) {
  if (a.is_exact()) return a;
  return a.digits() >= b.digits() ? a : b;
}

void check_base(int base_order) {
  if (base_order < -1 || base_order > 0) {
    throw DomainError("series base order must be -1 or 0, got " + std::to_string(base_order));
  }
}

}  // namespace

LaurentSeries::LaurentSeries(int base_order, std::vector<Scalar> coeffs)
    : base_order_(base_order), kind_(Kind::exact()), coeffs_(std::move(coeffs)) {
  check_base(base_order_);
  if (coeffs_.empty() || order() < 0) {
    throw DomainError("series needs coefficients through at least eps^0");
  }
  kind_ = coeffs_.front().kind();
  for (const auto& c : coeffs_) {
    if (c.is_exact() != kind_.is_exact()) {
      throw KindMismatch("series coefficients must share one scalar kind");
    }
    if (c.is_real()) kind_ = wider(kind_, c.kind());
  }
}

LaurentSeries LaurentSeries::zero(Kind kind, int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  return LaurentSeries(0, std::vector<Scalar>(order + 1, Scalar::zero(kind)));
}

LaurentSeries LaurentSeries::constant(const Scalar& c, int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  std::vector<Scalar> coeffs(order + 1, Scalar::zero(c.kind()));
  coeffs[0] = c;
  return LaurentSeries(0, std::move(coeffs));
}

LaurentSeries LaurentSeries::monomial(int power, Kind kind, int order) {
  if (power < -1 || power > order) throw DomainError("monomial power outside the series range");
  const int base = power < 0 ? -1 : 0;
  std::vector<Scalar> coeffs(order - base + 1, Scalar::zero(kind));
  coeffs[power - base] = Scalar::one(kind);
  return LaurentSeries(base, std::move(coeffs));
}

const Scalar& LaurentSeries::coefficient(int k) const {
  if (k < base_order_ || k > order()) {
    throw DomainError("coefficient index " + std::to_string(k) + " outside [" +
                      std::to_string(base_order_) + ", " + std::to_string(order()) + "]");
  }
  return coeffs_[k - base_order_];
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw DomainError("cannot extend a truncated series beyond its known order");
  }
  if (new_order < 0) throw DomainError("series order must be nonnegative");
  return LaurentSeries(base_order_,
                       std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + (new_order - base_order_ + 1)));
}

LaurentSeries LaurentSeries::with_base(int base_order) const {
  check_base(base_order);
  if (base_order > base_order_) {
    if (!coeffs_.front().is_zero()) throw DomainError("cannot raise the base order past a nonzero coefficient");
    return LaurentSeries(base_order, std::vector<Scalar>(coeffs_.begin() + 1, coeffs_.end()));
  }
  std::vector<Scalar> coeffs;
  coeffs.reserve(coeffs_.size() + (base_order_ - base_order));
  for (int k = base_order; k < base_order_; ++k) coeffs.push_back(Scalar::zero(kind_));
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return LaurentSeries(base_order, std::move(coeffs));
}

LaurentSeries LaurentSeries::operator-() const {
  std::vector<Scalar> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(-c);
  return LaurentSeries(base_order_, std::move(coeffs));
}

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
  check_same_kind(x, y);
  const int base = std::min(x.base_order(), y.base_order());
  const int order = std::min(x.order(), y.order());
  const Kind kind = wider(x.kind(), y.kind());
  std::vector<Scalar> coeffs;
  coeffs.reserve(order - base + 1);
  for (int k = base; k <= order; ++k) {
    Scalar c = Scalar::zero(kind);
    if (k >= x.base_order()) c += x.coefficient(k);
    if (k >= y.base_order()) c += y.coefficient(k);
    coeffs.push_back(std::move(c));
  }
  return LaurentSeries(base, std::move(coeffs));
}

LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return x + (-y); }

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  check_same_kind(x, y);
  const int base = x.base_order() + y.base_order();
  if (base < -1) throw DomainError("product would have base order below -1");
  const int order = std::min(x.order() + y.base_order(), y.order() + x.base_order());
  if (order < 0) throw DomainError("product is not determined through eps^0");
  const Kind kind = wider(x.kind(), y.kind());
  std::vector<Scalar> coeffs(order - base + 1, Scalar::zero(kind));
  for (int i = x.base_order(); i <= x.order(); ++i) {
    const Scalar& xi = x.coefficient(i);
    if (xi.is_zero()) continue;
    for (int j = y.base_order(); i + j <= order && j <= y.order(); ++j) {
      coeffs[i + j - base] += xi * y.coefficient(j);
    }
  }
  return LaurentSeries(base, std::move(coeffs));
}

LaurentSeries operator*(const Scalar& c, const LaurentSeries& x) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(x.coefficients().size());
  for (const auto& a : x.coefficients()) coeffs.push_back(c * a);
  return LaurentSeries(x.base_order(), std::move(coeffs));
}

LaurentSeries series_add(const LaurentSeries& x, const LaurentSeries& y) { return x + y; }

LaurentSeries series_mul(const LaurentSeries& x, const LaurentSeries& y) { return x * y; }

LaurentSeries series_div(const LaurentSeries& num, const LaurentSeries& den) {
  check_same_kind(num, den);
  if (den.base_order() != 0) throw DomainError("series_div: denominator must have base order 0");
  const Scalar& d0 = den.coefficient(0);
  if (d0.is_zero()) throw DomainError("series_div: denominator has a zero constant term");
  const int base = num.base_order();
  const int order = std::min(num.order(), den.order() + base);
  if (order < 0) throw DomainError("quotient is not determined through eps^0");
  std::vector<Scalar> q;
  q.reserve(order - base + 1);
  for (int k = base; k <= order; ++k) {
    Scalar acc = num.coefficient(k);
    for (int i = 1; k - i >= base; ++i) acc -= den.coefficient(i) * q[k - i - base];
    q.push_back(acc / d0);
  }
  return LaurentSeries(base, std::move(q));
}

LaurentSeries binomial_series(const Scalar& exponent, int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  const Kind kind = exponent.kind();
  std::vector<Scalar> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(Scalar::one(kind));
  for (int k = 1; k <= order; ++k) {
    coeffs.push_back(coeffs.back() * (exponent - (k - 1)) / k);
  }
  return LaurentSeries(0, std::move(coeffs));
}

LaurentSeries shift_substitute(const LaurentSeries& s, int order) {
  if (s.base_order() != 0) throw DomainError("shift_substitute needs a series with base order 0");
  if (order < 0) throw DomainError("series order must be nonnegative");
  const int result_order = std::min(order, s.order());
  const Kind kind = s.kind();
  // phi = eps/(1+eps) = eps - eps^2 + eps^3 - ...
  std::vector<Scalar> phi_coeffs(result_order + 1, Scalar::zero(kind));
  for (int k = 1; k <= result_order; ++k) phi_coeffs[k] = Scalar::from_int(k % 2 == 1 ? 1 : -1, kind);
  const LaurentSeries phi(0, std::move(phi_coeffs));

  LaurentSeries acc = LaurentSeries::constant(s.coefficient(result_order), result_order);
  for (int k = result_order - 1; k >= 0; --k) {
    acc = acc * phi + LaurentSeries::constant(s.coefficient(k), result_order);
  }
  return acc;
}

Scalar series_evaluate(const LaurentSeries& s, const Scalar& eps0) {
  if (s.base_order() < 0 && eps0.is_zero()) {
    throw DomainError("series_evaluate: eps = 0 with a Laurent part present");
  }
  const Kind kind = eps0.kind();
  const auto coeffs = s.coefficients();
  Scalar acc = coeffs.back().to(kind);
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    acc = acc * eps0 + it->to(kind);
  }
  if (s.base_order() < 0) acc /= eps0;
  return acc;
}

const Scalar& coefficient_at(const LaurentSeries& s, int k) { return s.coefficient(k); }

}  // namespace tailcut
