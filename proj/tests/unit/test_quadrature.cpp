#include "doctest.h"
#include "tailcut/errors.hpp"
#include "tailcut/quadrature.hpp"

using namespace tailcut;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const Kind kind = Kind::real(60);
  for (int n : {5, 12, 40}) {
    std::vector<Scalar> x, w;
    gauss_legendre_rule(n, kind, x, w);
    Scalar weight_sum = Scalar::zero(kind);
    Scalar moment = Scalar::zero(kind);
    for (int i = 0; i < n; ++i) {
      weight_sum += w[i];
      moment += w[i] * pow(x[i], 2 * n - 2);
    }
    const Scalar tol = Scalar::parse("1e-55", kind);
    CHECK(abs(weight_sum - 2) < tol);
    CHECK(abs(moment - Scalar::from_fraction(2, 2 * n - 1, kind)) < tol);
  }
  std::vector<Scalar> x, w;
  CHECK_THROWS_AS(gauss_legendre_rule(4, Kind::exact(), x, w), DomainError);
}

TEST_CASE("adaptive integration") {
  QuadratureConfig cfg;
  cfg.digits = 60;
  const Kind kind = Kind::real(70);
  const auto r = integrate([](const Scalar& t) { return exp(-t); }, Scalar::zero(kind), Scalar::from_int(3, kind), cfg);
  const Scalar expected = 1 - exp(-Scalar::from_int(3, kind));
  CHECK(abs(r.value - expected) / expected < Scalar::parse("1e-59", kind));

  const auto pi_quarter = integrate([](const Scalar& t) { return 1 / (1 + t * t); }, Scalar::zero(kind),
                                    Scalar::one(kind), cfg);
  CHECK(abs(4 * pi_quarter.value - pi(70)) < Scalar::parse("1e-58", kind));

  cfg.max_subdivisions = 2;
  CHECK_THROWS_AS(integrate([](const Scalar& t) { return exp(-t * t * 1000); }, -Scalar::from_int(50, kind),
                            Scalar::from_int(50, kind), cfg),
                  OracleFailure);
}
