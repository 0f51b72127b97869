#include "tailcut/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

#include "tailcut/errors.hpp"

namespace tailcut {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<Scalar, Scalar> legendre(int n, const Scalar& x) {
  Scalar p0 = Scalar::one(x.kind());
  Scalar p1 = x;
  for (int k = 2; k <= n; ++k) {
    Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  Scalar dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

struct Rule {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;

  Scalar apply(const std::function<Scalar(const Scalar&)>& f, const Scalar& a, const Scalar& b) const {
    const Scalar half = (b - a) / 2;
    const Scalar mid = (a + b) / 2;
    Scalar sum = Scalar::zero(a.kind());
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

struct Panel {
  Scalar a;
  Scalar b;
  Scalar whole;
};

}  // namespace

void gauss_legendre_rule(int n, Kind kind, std::vector<Scalar>& nodes, std::vector<Scalar>& weights) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  if (kind.is_exact()) throw DomainError("Gauss-Legendre nodes are irrational; use a real kind");
  nodes.assign(n, Scalar::zero(kind));
  weights.assign(n, Scalar::zero(kind));
  const Scalar tol = pow(Scalar::from_int(10, kind), 2L - kind.digits());
  for (int i = 0; i < (n + 1) / 2; ++i) {
    const double guess = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17f", guess);
    Scalar x = Scalar::parse(buf, kind);
    Scalar dp = Scalar::one(kind);
    for (int iter = 0; iter < 200; ++iter) {
      auto [p, d] = legendre(n, x);
      const Scalar step = p / d;
      x -= step;
      dp = std::move(d);
      if (abs(step) <= tol) {
        dp = legendre(n, x).second;
        break;
      }
    }
    const Scalar w = Scalar::from_int(2, kind) / ((1 - x * x) * dp * dp);
    nodes[i] = -x;
    weights[i] = w;
    nodes[n - 1 - i] = x;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    // The middle root is exactly zero.
    const Scalar zero = Scalar::zero(kind);
    const Scalar dp = legendre(n, zero).second;
    nodes[n / 2] = zero;
    weights[n / 2] = Scalar::from_int(2, kind) / (dp * dp);
  }
}

QuadratureResult integrate(const std::function<Scalar(const Scalar&)>& f, const Scalar& a, const Scalar& b,
                           const QuadratureConfig& cfg) {
  const Kind kind = Kind::real(cfg.digits + 10);
  Rule rule;
  gauss_legendre_rule(cfg.nodes, kind, rule.nodes, rule.weights);
  const Scalar lo = a.to(kind);
  const Scalar hi = b.to(kind);
  const Scalar length = hi - lo;

  constexpr int kInitialPanels = 16;
  std::vector<Panel> stack;
  Scalar coarse = Scalar::zero(kind);
  for (int i = kInitialPanels - 1; i >= 0; --i) {
    const Scalar pa = lo + length * i / kInitialPanels;
    const Scalar pb = lo + length * (i + 1) / kInitialPanels;
    Scalar whole = rule.apply(f, pa, pb);
    coarse += abs(whole);
    stack.push_back({pa, pb, std::move(whole)});
  }
  const Scalar floor = pow(Scalar::from_int(10, kind), -2L * kind.digits());
  const Scalar tol = std::max(coarse, floor) * pow(Scalar::from_int(10, kind), -static_cast<long>(cfg.digits));

  QuadratureResult result{Scalar::zero(kind), Scalar::zero(kind), 0};
  int splits = 0;
  while (!stack.empty()) {
    Panel panel = std::move(stack.back());
    stack.pop_back();
    const Scalar mid = (panel.a + panel.b) / 2;
    Scalar left = rule.apply(f, panel.a, mid);
    Scalar right = rule.apply(f, mid, panel.b);
    const Scalar err = abs(panel.whole - (left + right));
    if (err <= tol * (panel.b - panel.a) / length) {
      result.value += left + right;
      result.error_estimate += err;
      ++result.panels;
      continue;
    }
    if (++splits > cfg.max_subdivisions) {
      throw OracleFailure("quadrature did not converge within " + std::to_string(cfg.max_subdivisions) +
                          " subdivisions");
    }
    stack.push_back({mid, panel.b, std::move(right)});
    stack.push_back({panel.a, mid, std::move(left)});
  }
  return result;
}

}  // namespace tailcut
