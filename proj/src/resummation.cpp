#include "tailcut/resummation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tailcut/combinatorics.hpp"
#include "tailcut/errors.hpp"
#include "tailcut/series.hpp"

namespace tailcut {

namespace {

Scalar horner(const std::vector<Scalar>& coeffs, const Scalar& x) {
  const Kind kind = x.kind();
  Scalar acc = coeffs.back().to(kind);
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + it->to(kind);
  return acc;
}

Scalar eps_at(const FamilySpec& f, long n, Kind kind) {
  return Scalar::one(kind) / Scalar::from_int(n + f.alpha(), kind);
}

Scalar tolerance(Kind kind, int slack_digits) {
  return pow(Scalar::from_int(10, kind), static_cast<long>(slack_digits) - kind.digits());
}

// Solves A x = b in place by Gaussian elimination; partial pivoting in real kind.
std::vector<Scalar> solve_dense(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t n = b.size();
  if (n == 0) return {};
  const Kind kind = b.front().kind();
  Scalar scale = Scalar::zero(kind);
  for (const auto& row : a)
    for (const auto& x : row) scale = std::max(scale, abs(x));
  const Scalar threshold = kind.is_exact() ? Scalar::zero(kind) : scale * tolerance(kind, 5);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if (kind.is_exact()) {
      while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    } else {
      for (std::size_t r = col + 1; r < n; ++r) {
        if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
      }
    }
    if (pivot == n || abs(a[pivot][col]) <= threshold) {
      throw DegeneratePade("degenerate Pade table: singular denominator system");
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Scalar> x(n, Scalar::zero(kind));
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

PadeApproximant::PadeApproximant(int L, int M, std::vector<Scalar> p, std::vector<Scalar> q)
    : L_(L), M_(M), p_(std::move(p)), q_(std::move(q)) {
  if (static_cast<int>(p_.size()) != L_ + 1 || static_cast<int>(q_.size()) != M_ + 1) {
    throw DomainError("Pade coefficient counts do not match the degrees");
  }
}

Scalar PadeApproximant::evaluate(const Scalar& eps) const {
  const Scalar den = horner(q_, eps);
  if (den.is_zero()) throw PoleError("Pade approximant evaluated at a pole");
  return horner(p_, eps) / den;
}

std::string method_name(const Method& method) {
  if (std::holds_alternative<PowerMethod>(method)) return "power";
  if (std::holds_alternative<FactorialMethod>(method)) return "factorial";
  const auto& pade = std::get<PadeMethod>(method);
  return "pade[" + std::to_string(pade.L) + "/" + std::to_string(pade.M) + "]";
}

Scalar remainder_power(const FamilySpec& f, const GammaVector& g, long n, std::optional<Kind> kind) {
  const Kind k = kind.value_or(natural_kind(f));
  return scale_at(f, n, k) * horner(g.coeffs, eps_at(f, n, k));
}

FactorialGamma gamma_to_factorial(const GammaVector& g) {
  const Kind kind = g.kind();
  std::vector<Scalar> tilde;
  tilde.reserve(g.m + 1);
  for (int mu = 0; mu <= g.m; ++mu) {
    if (mu < 2) {
      tilde.push_back(g.coeffs[mu]);
      continue;
    }
    Scalar acc = Scalar::zero(kind);
    for (int v = 1; v <= mu; ++v) {
      const mpz_class s1 = stirling_first(mu - 1, v - 1);
      if (s1 == 0) continue;
      const Scalar weight = Scalar(mpq_class((mu + v) % 2 == 0 ? s1 : mpz_class(-s1))).to(kind);
      acc += weight * g.coeffs[v];
    }
    tilde.push_back(std::move(acc));
  }
  return FactorialGamma{std::move(tilde), g};
}

Scalar remainder_factorial(const FamilySpec& f, const FactorialGamma& fg, long n, std::optional<Kind> kind) {
  const Kind k = kind.value_or(natural_kind(f));
  const Scalar x = Scalar::from_int(n + f.alpha(), k);
  Scalar sum = Scalar::zero(k);
  Scalar rising = Scalar::one(k);  // (x)_mu
  for (std::size_t mu = 0; mu < fg.coeffs.size(); ++mu) {
    sum += fg.coeffs[mu].to(k) / rising;
    rising *= x + static_cast<long>(mu);
  }
  return scale_at(f, n, k) * sum;
}

PadeApproximant pade_from_series(std::span<const Scalar> coeffs, int L, int M) {
  if (L < 0 || M < 0) throw DomainError("Pade degrees must be nonnegative");
  if (static_cast<int>(coeffs.size()) < L + M + 1) {
    throw DomainError("Pade [" + std::to_string(L) + "/" + std::to_string(M) + "] needs " +
                      std::to_string(L + M + 1) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  const Kind kind = coeffs.front().kind();
  auto c = [&](int k) { return k < 0 ? Scalar::zero(kind) : coeffs[k]; };

  // sum_{k=1}^{M} c_{L+j-k} q_k = -c_{L+j},  j = 1..M
  std::vector<std::vector<Scalar>> a(M, std::vector<Scalar>(M));
  std::vector<Scalar> b(M);
  for (int j = 1; j <= M; ++j) {
    for (int k = 1; k <= M; ++k) a[j - 1][k - 1] = c(L + j - k);
    b[j - 1] = -c(L + j);
  }
  std::vector<Scalar> q{Scalar::one(kind)};
  for (auto& x : solve_dense(std::move(a), std::move(b))) q.push_back(std::move(x));

  std::vector<Scalar> p;
  p.reserve(L + 1);
  for (int k = 0; k <= L; ++k) {
    Scalar acc = Scalar::zero(kind);
    for (int i = 0; i <= std::min(k, M); ++i) acc += c(k - i) * q[i];
    p.push_back(std::move(acc));
  }

  // Matching check: the expansion of p/q reproduces c_0..c_{L+M}.
  const int order = L + M;
  std::vector<Scalar> p_ext(order + 1, Scalar::zero(kind));
  std::vector<Scalar> q_ext(order + 1, Scalar::zero(kind));
  std::copy(p.begin(), p.end(), p_ext.begin());
  std::copy(q.begin(), q.end(), q_ext.begin());
  const LaurentSeries ratio = series_div(LaurentSeries(0, p_ext), LaurentSeries(0, q_ext));
  Scalar c_scale = Scalar::zero(kind);
  Scalar q_scale = Scalar::one(kind);
  for (int k = 0; k <= order; ++k) c_scale = std::max(c_scale, abs(coeffs[k]));
  for (const auto& x : q) q_scale = std::max(q_scale, abs(x));
  for (int k = 0; k <= order; ++k) {
    const Scalar diff = ratio.coefficient(k) - coeffs[k];
    const bool ok = kind.is_exact() ? diff.is_zero() : abs(diff) <= c_scale * q_scale * tolerance(kind, 10);
    if (!ok) throw InvariantViolation("Pade expansion does not match the series at eps^" + std::to_string(k));
  }
  return PadeApproximant(L, M, std::move(p), std::move(q));
}

Scalar remainder_pade(const FamilySpec& f, const GammaVector& g, long n, int L, int M, std::optional<Kind> kind) {
  if (L + M > g.m) {
    throw DomainError("Pade degrees L+M=" + std::to_string(L + M) + " exceed the expansion order m=" +
                      std::to_string(g.m));
  }
  const Kind k = kind.value_or(natural_kind(f));
  const PadeApproximant pade = pade_from_series(g.coeffs, L, M);
  return scale_at(f, n, k) * pade.evaluate(eps_at(f, n, k));
}

Scalar remainder_by(const FamilySpec& f, const GammaVector& g, long n, const Method& method,
                    std::optional<Kind> kind) {
  if (std::holds_alternative<PowerMethod>(method)) return remainder_power(f, g, n, kind);
  if (std::holds_alternative<FactorialMethod>(method)) {
    return remainder_factorial(f, gamma_to_factorial(g), n, kind);
  }
  const auto& pade = std::get<PadeMethod>(method);
  return remainder_pade(f, g, n, pade.L, pade.M, kind);
}

Scalar corrected_sum(const FamilySpec& f, long n, int m, const Method& method, std::optional<Kind> kind) {
  const Kind k = kind.value_or(natural_kind(f));
  const GammaVector g = solve_gamma(f, m);
  return partial_sum(f, n, k) - remainder_by(f, g, n, method, k);
}

}  // namespace tailcut
