#include "tailcut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tailcut/combinatorics.hpp"
#include "tailcut/errors.hpp"
#include "tailcut/quadrature.hpp"

namespace tailcut {

namespace {

constexpr int kGuardDigits = 10;

constexpr const char* kEulerGamma =
    "0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749514631447249807082480960504014486542836224173997644923536253500333742937337737673942792595258247094916008735203948165670853233151776611528621199501507984793745085705740029921354786146694029604325421519";

Scalar ten_pow(long e, Kind kind) { return pow(Scalar::from_int(10, kind), e); }

Scalar real_parameter(const Scalar& x, Kind kind) { return x.to(kind); }

bool agree(const Scalar& a, const Scalar& b, const Scalar& reference, long digits) {
  return abs(a - b) <= abs(reference) * ten_pow(-digits, a.kind());
}

Scalar hypergeometric_ratio(const FamilySpec& f, long v, Kind kind) {
  // a_{v+1} / a_v
  Scalar num = real_parameter(f.z(), kind);
  for (const auto& alpha : f.numerator_params()) num *= real_parameter(alpha, kind) + v;
  Scalar den = Scalar::from_int(v + 1, kind);
  for (const auto& beta : f.denominator_params()) den *= real_parameter(beta, kind) + v;
  return num / den;
}

Scalar hypergeometric_remainder(const FamilySpec& f, long n, const OracleConfig& cfg) {
  const Kind kind = Kind::real(cfg.digits + kGuardDigits);
  const Scalar z = real_parameter(f.z(), kind);
  if (!(abs(z) < Scalar::one(kind))) throw DomainError("hypergeometric tail needs |z| < 1");
  const Scalar stop = ten_pow(-(cfg.digits + kGuardDigits + 5L), kind);
  Scalar a = term(f, n + 1, kind);
  Scalar tail = Scalar::zero(kind);
  for (long v = n + 1, count = 0;; ++v, ++count) {
    if (count > cfg.max_tail_terms) throw OracleFailure("hypergeometric tail did not reach the stop rule");
    tail += a;
    const Scalar ratio = abs(hypergeometric_ratio(f, v, kind));
    a *= hypergeometric_ratio(f, v, kind);
    if (ratio < Scalar::one(kind)) {
      const Scalar bound = abs(a) / (1 - ratio);
      if (bound <= stop * abs(tail)) break;
    }
  }
  return (-tail).to(Kind::real(cfg.digits));
}

Scalar e1_remainder_integral(const Scalar& z, long n, const OracleConfig& cfg) {
  const int work = cfg.digits + kGuardDigits;
  const Kind kind = Kind::real(work);
  const Scalar zr = z.to(kind);
  const Scalar nfact = Scalar(mpq_class(factorial(static_cast<int>(n + 1)))).to(kind);
  auto integrand = [&](const Scalar& t) { return pow(t, n + 1) * exp(-t) / (1 + t / zr); };
  // Tail beyond T is below t^(n+1) e^-t at T times T/(T-n-1) <= 2 for T >= 2(n+1).
  Scalar upper = Scalar::from_int(std::max(2 * (n + 2), static_cast<long>((work + 10) * 2.31)), kind);
  const Scalar target = nfact * ten_pow(-(work + 10L), kind);
  while (2 * integrand(upper) > target) upper = upper + 10;
  const QuadratureConfig qcfg{work, cfg.quadrature_nodes, cfg.max_subdivisions};
  const Scalar integral = integrate(integrand, Scalar::zero(kind), upper, qcfg).value;
  const Scalar sign = Scalar::from_int(n % 2 == 0 ? 1 : -1, kind);  // -(-1)^(n+1)
  return sign * integral / pow(zr, n + 1);
}

void require_positive_real(const Scalar& z) {
  if (z.sign() <= 0) throw DomainError("E1 oracle covers z > 0 only");
}

}  // namespace

Scalar euler_gamma(int digits) {
  if (digits > 300) throw DomainError("embedded Euler-Mascheroni literal carries 300 digits");
  return Scalar::parse(kEulerGamma, Kind::real(digits));
}

ZetaEvaluation zeta_euler_maclaurin(const Scalar& s_in, long n0, int digits) {
  const Kind kind = Kind::real(digits + kGuardDigits);
  const Scalar s = s_in.to(kind);
  if (!(s > Scalar::one(kind))) throw DomainError("zeta oracle needs s > 1");
  Scalar value = Scalar::zero(kind);
  for (long v = n0; v >= 0; --v) value += pow(Scalar::from_int(v + 1, kind), -s);
  const Scalar N = Scalar::from_int(n0 + 2, kind);
  const Scalar n_pow = pow(N, 1 - s);
  value += n_pow / (s - 1) + n_pow / N / 2;

  const Scalar threshold = ten_pow(-(digits + kGuardDigits + 0L), kind);
  const Scalar inv_n2 = Scalar::one(kind) / (N * N);
  Scalar poch = s;                                 // (s)_{2j-1}
  Scalar power = n_pow * inv_n2;                   // N^(-s-2j+1)
  Scalar fact = Scalar::from_int(2, kind);         // (2j)!
  Scalar previous;
  bool have_previous = false;
  for (int j = 1; j <= 2000; ++j) {
    const Scalar correction = poch * bernoulli(2 * j).to(kind) / fact * power;
    if (abs(correction) < threshold * abs(value)) return {n0, j - 1, value.to(Kind::real(digits))};
    if (have_previous && abs(correction) > abs(previous)) {
      throw OracleFailure("Euler-Maclaurin corrections diverge before reaching precision (n0=" +
                          std::to_string(n0) + ")");
    }
    value += correction;
    previous = correction;
    have_previous = true;
    poch *= (s + (2 * j - 1)) * (s + 2 * j);
    power *= inv_n2;
    fact *= Scalar::from_int((2 * j + 1) * (2 * j + 2), kind);
  }
  throw OracleFailure("Euler-Maclaurin correction count exceeded");
}

Scalar zeta_reference(const Scalar& s, const OracleConfig& cfg) {
  const long n0 = std::max(20, cfg.digits);
  const ZetaEvaluation first = zeta_euler_maclaurin(s, n0, cfg.digits);
  const ZetaEvaluation second = zeta_euler_maclaurin(s, 2 * n0 + 7, cfg.digits);
  if (first.k == second.k && first.n0 == second.n0) throw OracleFailure("zeta self-check needs distinct pairs");
  if (!agree(first.value, second.value, first.value, cfg.digits - 5L)) {
    throw OracleFailure("zeta self-consistency check failed at s=" + s.str(17));
  }
  return first.value;
}

Scalar e1_reference_quadrature(const Scalar& z, const OracleConfig& cfg) {
  require_positive_real(z);
  const int work = cfg.digits + kGuardDigits;
  const Kind kind = Kind::real(work);
  const Scalar zr = z.to(kind);
  // e^-T < 10^-(work+10)
  const Scalar upper = Scalar::from_int(static_cast<long>(std::ceil((work + 10) * std::log(10.0))) + 1, kind);
  auto integrand = [&](const Scalar& t) { return exp(-t) / (1 + t / zr); };
  const QuadratureConfig qcfg{work, cfg.quadrature_nodes, cfg.max_subdivisions};
  return integrate(integrand, Scalar::zero(kind), upper, qcfg).value.to(Kind::real(cfg.digits));
}

Scalar e1_reference_series(const Scalar& z, const OracleConfig& cfg) {
  require_positive_real(z);
  const double zd = z.to_double();
  // The alternating sum cancels down from e^z to e^-z: about 0.87 z digits.
  const int work = cfg.digits + kGuardDigits + static_cast<int>(std::ceil(2 * zd / std::log(10.0))) + 5;
  const Kind kind = Kind::real(work);
  const Scalar zr = z.to(kind);
  const Scalar threshold = ten_pow(-(cfg.digits + kGuardDigits + 0L), kind) * exp(-zr) / (2 * (zr + 1));
  Scalar sum = Scalar::zero(kind);
  Scalar power = Scalar::one(kind);  // z^k / k!
  for (long k = 1;; ++k) {
    power *= zr / k;
    const Scalar t = power / k;
    sum += (k % 2 == 1) ? t : -t;
    if (k > zd && t < threshold) break;
    if (k > 1'000'000) throw OracleFailure("E1 series did not converge");
  }
  const Scalar e1 = -euler_gamma(work) - log(zr) + sum;
  return (zr * exp(zr) * e1).to(Kind::real(cfg.digits));
}

Scalar e1_reference(const Scalar& z, const OracleConfig& cfg) {
  const Scalar by_series = e1_reference_series(z, cfg);
  const Scalar by_quadrature = e1_reference_quadrature(z, cfg);
  if (!agree(by_series, by_quadrature, by_series, cfg.digits - 10L)) {
    throw OracleFailure("E1 oracle routes disagree at z=" + z.str(17));
  }
  return by_series;
}

Scalar remainder_exact(const FamilySpec& f, long n, const OracleConfig& cfg) {
  if (n < 0) throw DomainError("index must be nonnegative");
  const Kind out = Kind::real(cfg.digits);
  const Kind work = Kind::real(cfg.digits + kGuardDigits);
  switch (f.id()) {
    case FamilyId::zeta: {
      OracleConfig inner = cfg;
      inner.digits += kGuardDigits;
      return (partial_sum(f, n, work) - zeta_reference(f.s(), inner).to(work)).to(out);
    }
    case FamilyId::hyp2f1:
    case FamilyId::pfq:
      return hypergeometric_remainder(f, n, cfg);
    case FamilyId::e1: {
      OracleConfig inner = cfg;
      inner.digits += kGuardDigits;
      const Scalar reference = e1_reference(f.z(), inner).to(work);
      const Scalar r = partial_sum(f, n, work) - reference;
      const Scalar cross = e1_remainder_integral(f.z(), n, cfg).to(work);
      if (!agree(r, cross, std::max(abs(r), abs(reference)), cfg.digits - 10L)) {
        throw OracleFailure("E1 remainder cross-check failed at n=" + std::to_string(n));
      }
      return r.to(out);
    }
  }
  throw DomainError("unknown family");
}

Scalar euler_maclaurin_zeta_tail(const Scalar& s, long n, int m, std::optional<Kind> kind) {
  if (s == Scalar::one(s.kind())) throw DegenerateParameter("s", "pivot degenerate at s=1");
  if (m < 0) throw DomainError("expansion order m must be nonnegative");
  Kind k = s.kind();
  if (s.is_exact() && !s.is_integer()) k = Kind::real(kDefaultDigits);
  if (kind) k = *kind;
  if (k.is_exact() && !(s.is_exact() && s.is_integer())) {
    throw DomainError("exact Euler-Maclaurin tail needs integer s");
  }
  const Scalar N = Scalar::from_int(n + 2, k);
  const Scalar sk = s.to(k);
  Scalar base = k.is_exact() ? pow(N, 1 - *s.as_long()) : pow(N, 1 - sk);
  const Scalar inv_n = Scalar::one(k) / N;
  Scalar total = Scalar::zero(k);
  Scalar poch = Scalar::one(k) / (sk - 1);  // (s)_{-1}
  for (int mu = 0; mu <= m; ++mu) {
    const Scalar fact = Scalar(mpq_class(factorial(mu))).to(k);
    const Scalar sign = Scalar::from_int(mu % 2 == 1 ? 1 : -1, k);  // (-1)^(mu-1)
    total += sign * poch * bernoulli(mu).to(k) / fact * base;
    poch = mu == 0 ? Scalar::one(k) : poch * (sk + (mu - 1));
    base *= inv_n;
  }
  return total;
}

}  // namespace tailcut
