#include "checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "tailcut/combinatorics.hpp"
#include "tailcut/errors.hpp"
#include "tailcut/gamma_solver.hpp"
#include "tailcut/oracle.hpp"
#include "tailcut/resummation.hpp"

namespace tailcut::cli {

namespace {

Scalar q(long num, long den = 1) { return Scalar::from_fraction(num, den); }

CheckOutcome check_bernoulli(int max) {
  std::ostringstream detail;
  bool pass = true;
  for (const Scalar& s : {q(2), q(5), q(3, 2), q(7, 3), q(-1, 2)}) {
    const GammaVector g = solve_gamma(make_zeta(s), max);
    const auto betas = zeta_betas(g);
    for (int mu = 0; mu <= max; ++mu) {
      if (betas[mu] != bernoulli(mu)) {
        pass = false;
        detail << " beta_" << mu << "!=B_" << mu << " at s=" << s.str();
      }
    }
    if (s.is_integer()) {
      const FamilySpec f = make_zeta(s);
      for (long n : {0L, 5L, 20L}) {
        if (euler_maclaurin_zeta_tail(s, n, max, Kind::exact()) != remainder_power(f, g, n, Kind::exact())) {
          pass = false;
          detail << " tail mismatch at s=" << s.str() << " n=" << n;
        }
      }
    }
  }
  if (pass) detail << " beta_mu = B_mu for mu <= " << max << " at s in {2, 5, 3/2, 7/3, -1/2}";
  return {"bernoulli", pass, detail.str()};
}

CheckOutcome check_order(const Request& req) {
  const FamilySpec f = build_family(req);
  const double slope = defect_slope(f, req.m, 20, 60);
  const double target = -(req.m + 1.0);
  std::ostringstream detail;
  detail << " slope " << slope << " target " << target << " +- 0.3";
  return {"order", std::fabs(slope - target) <= 0.3, detail.str()};
}

CheckOutcome check_pade() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  int built = 0;
  int degenerate = 0;
  std::ostringstream detail;
  bool pass = true;
  for (int L = 0; L <= 4; ++L) {
    for (int M = 0; M <= 4; ++M) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Scalar> c;
        for (int k = 0; k <= L + M; ++k) c.push_back(q(num(rng), den(rng)));
        try {
          pade_from_series(c, L, M);
          ++built;
        } catch (const DegeneratePade&) {
          ++degenerate;
        } catch (const InvariantViolation& e) {
          pass = false;
          detail << " " << e.what();
        }
      }
    }
  }
  // [L/0] is the truncated power form.
  const FamilySpec e1 = make_e1(q(5));
  const GammaVector g = solve_gamma(e1, 6);
  for (int L = 0; L <= 6; ++L) {
    GammaVector truncated{e1, L, std::vector<Scalar>(g.coeffs.begin(), g.coeffs.begin() + L + 1)};
    if (remainder_pade(e1, g, 7, L, 0, Kind::exact()) != remainder_power(e1, truncated, 7, Kind::exact())) {
      pass = false;
      detail << " [" << L << "/0] differs from the truncated power form";
    }
  }
  detail << " matched " << built << " random tables (" << degenerate << " degenerate)";
  return {"pade", pass, detail.str()};
}

CheckOutcome check_pade22(const std::vector<Scalar>& zs) {
  bool pass = true;
  std::ostringstream detail;
  for (const Scalar& z : zs) {
    const GammaVector g = solve_gamma(make_e1(z), 4);
    const PadeApproximant pade = pade_from_series(g.coeffs, 2, 2);
    const std::vector<Scalar> p{q(1), z - 3, q(2)};
    const std::vector<Scalar> qq{q(1), 2 * z - 3, z * z - 2 * z + 2};
    bool ok = pade.numerator() == p && pade.denominator() == qq;
    for (long n = 0; n <= 12 && ok; ++n) {
      const Scalar nn = q(n);
      const Scalar closed = (nn * nn - nn + z * nn + z) / (nn * nn - nn + 2 * z * nn + z * z);
      ok = pade.evaluate(q(1, n + 1)) == closed;
    }
    if (!ok) {
      pass = false;
      detail << " mismatch at z=" << z.str();
    }
  }
  detail << " [2/2] = (n^2-n+zn+z)/(n^2-n+2zn+z^2) at " << zs.size() << " values of z";
  return {"pade22", pass, detail.str()};
}

CheckOutcome check_oracle() {
  OracleConfig cfg;
  const long tol_digits = cfg.digits - 10L;
  auto close = [&](const Scalar& a, const Scalar& b, const Scalar& ref) {
    const Kind k = Kind::real(cfg.digits);
    return abs(a.to(k) - b.to(k)) <= abs(ref.to(k)) * pow(Scalar::from_int(10, k), -tol_digits);
  };
  bool pass = true;
  std::ostringstream detail;
  for (long z : {1L, 2L, 5L, 10L}) {
    if (!close(e1_reference_series(q(z), cfg), e1_reference_quadrature(q(z), cfg), e1_reference_series(q(z), cfg))) {
      pass = false;
      detail << " E1 routes disagree at z=" << z;
    }
  }
  const Kind sk = Kind::real(cfg.digits);
  for (const char* s : {"1.1", "2", "4"}) {
    const Scalar sv = Scalar::parse(s, sk);
    const auto a = zeta_euler_maclaurin(sv, 40, cfg.digits);
    const auto b = zeta_euler_maclaurin(sv, 150, cfg.digits);
    if (!close(a.value, b.value, a.value)) {
      pass = false;
      detail << " zeta pairs disagree at s=" << s;
    }
  }
  const std::vector<FamilySpec> families{
      make_zeta(q(2)), make_2f1(q(1, 3), q(7, 5), q(9, 2), q(-17, 20)), make_e1(q(5)),
      make_pfq({q(1, 2), q(2, 3), q(5, 4)}, {q(7, 3), q(9, 4)}, q(1, 2))};
  for (const auto& f : families) {
    Scalar prev = remainder_exact(f, 0, cfg);
    for (long n = 0; n < 20; ++n) {
      const Scalar next = remainder_exact(f, n + 1, cfg);
      const Scalar a = term(f, n + 1, Kind::real(cfg.digits));
      const Scalar ref = std::max({abs(prev), abs(a), Scalar::one(Kind::real(cfg.digits))});
      if (!close(next - prev, a, ref)) {
        pass = false;
        detail << " difference equation fails for " << f.name() << " at n=" << n;
        break;
      }
      prev = next;
    }
  }
  if (pass) detail << " dual routes, zeta self-consistency and r_{n+1}-r_n = a_{n+1} to " << tol_digits << " digits";
  return {"oracle", pass, detail.str()};
}

}  // namespace

double defect_slope(const FamilySpec& f, int m, long lo, long hi) {
  const GammaVector g = solve_gamma(f, m);
  const Kind kind = Kind::real(kDefaultDigits);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(hi - lo + 1);
  for (long n = lo; n <= hi; ++n) {
    const double x = std::log(static_cast<double>(n + f.alpha()));
    const double y = log10_abs(residual_defect(f, g, n, kind)) * std::log(10.0);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::vector<CheckOutcome> run_checks(const CheckOptions& opts) {
  std::vector<CheckOutcome> out;
  const bool all = opts.suite == "all";
  if (all || opts.suite == "bernoulli") out.push_back(check_bernoulli(opts.max));
  if (all || opts.suite == "order") {
    if (opts.has_family) {
      out.push_back(check_order(opts.request));
    } else if (!all) {
      throw UsageError("check order needs --family and its parameters");
    }
  }
  if (all || opts.suite == "pade") out.push_back(check_pade());
  if (all || opts.suite == "pade22") {
    const bool e1 = opts.has_family && opts.request.family == "e1";
    if (!all && opts.has_family && !e1) throw UsageError("check pade22 applies to family e1");
    std::vector<Scalar> zs{q(5), q(1), q(-3, 7), q(11, 4), q(100, 3)};
    if (e1 && opts.request.params.count("z")) {
      const Scalar z = build_family(opts.request).z();
      if (!z.is_exact()) throw UsageError("check pade22 needs an exact z");
      zs = {z};
    }
    out.push_back(check_pade22(zs));
  }
  if (all || opts.suite == "oracle") out.push_back(check_oracle());
  if (out.empty()) throw UsageError("unknown check suite '" + opts.suite + "'");
  return out;
}

}  // namespace tailcut::cli
