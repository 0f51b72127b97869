#include <cmath>
#include <random>

#include "doctest.h"
#include "tailcut/errors.hpp"
#include "tailcut/families.hpp"

using namespace tailcut;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_fraction(n, d); }

std::vector<Scalar> coeffs(const LaurentSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

FamilySpec paper_2f1() { return make_2f1(q(1, 3), q(7, 5), q(9, 2), q(-17, 20)); }

}  // namespace

TEST_CASE("zeta family") {
  const FamilySpec f = make_zeta(q(2));
  CHECK(f.alpha() == 2);
  CHECK(term(f, 3) == q(1, 16));
  CHECK(partial_sum(f, 1) == q(5, 4));
  CHECK(scale_at(f, 3) == q(1, 5));
  const auto ops = residual_operators(f, 3);
  CHECK(ops.U.base_order() == -1);
  CHECK((ops.U + ops.V).coefficient(-1) == q(0));
  // eps^0 of U gamma_0 + V gamma_0 is (1-s) gamma_0
  CHECK((ops.U + ops.V).coefficient(0) == 1 - q(2));
  CHECK_THROWS_AS(make_zeta(q(1)), DegenerateParameter);
  CHECK_THROWS_AS(term(make_zeta(q(3, 2)), 2, Kind::exact()), DomainError);
  CHECK(natural_kind(make_zeta(q(3, 2))).is_real());
}

TEST_CASE("2F1 family") {
  const FamilySpec f = paper_2f1();
  CHECK(f.alpha() == 1);
  CHECK(term(f, 0) == q(1));
  CHECK(partial_sum(f, 0) == q(1));
  CHECK(term(f, 1) == q(1, 3) * q(7, 5) * q(-17, 20) / q(9, 2));
  CHECK(scale_at(f, 4) == term(f, 5));
  const auto ops = residual_operators(f, 2);
  CHECK(coeffs(ops.U) == std::vector<Scalar>{q(-1), q(0), q(0)});
  CHECK(ops.V.coefficient(0) == q(-17, 20));
  CHECK(ops.V.coefficient(1) == q(-17, 20) * (q(1, 3) + q(7, 5) - q(9, 2) - 1));
  const auto order0 = residual_operators(f, 0);
  CHECK(coeffs(order0.U) == std::vector<Scalar>{q(-1)});
  CHECK(coeffs(order0.V) == std::vector<Scalar>{q(-17, 20)});
  CHECK(f.describe() == "a=1/3,b=7/5,c=9/2,z=-17/20");

  CHECK_THROWS_AS(make_2f1(q(1), q(1), q(1), q(1)), DegenerateParameter);
  CHECK_THROWS_AS(make_2f1(q(1), q(1), q(-2), q(1, 2)), DegenerateParameter);
  CHECK_THROWS_AS(make_2f1(q(1), q(1), q(0), q(1, 2)), DegenerateParameter);
  CHECK_THROWS_AS(make_2f1(q(-3), q(1), q(2), q(1, 2)), DegenerateParameter);
  try {
    make_2f1(q(1), q(1), q(1), q(1));
  } catch (const DegenerateParameter& e) {
    CHECK(e.parameter() == "z");
    CHECK(std::string(e.what()).find("pivot degenerate at z=1") != std::string::npos);
  }
}

TEST_CASE("pFq family") {
  const FamilySpec g = make_pfq({q(1, 3), q(7, 5)}, {q(9, 2)}, q(-17, 20));
  const FamilySpec f = paper_2f1();
  for (int order : {0, 3, 6}) {
    CHECK(coeffs(residual_operators(g, order).U) == coeffs(residual_operators(f, order).U));
    CHECK(coeffs(residual_operators(g, order).V) == coeffs(residual_operators(f, order).V));
  }
  for (long n : {0L, 1L, 7L, 15L}) {
    CHECK(term(g, n) == term(f, n));
    CHECK(partial_sum(g, n) == partial_sum(f, n));
    CHECK(scale_at(g, n) == scale_at(f, n));
  }
  const std::vector<Scalar> alphas{q(1, 2), q(2, 3), q(5, 4)};
  const std::vector<Scalar> betas{q(7, 3), q(9, 4)};
  const Scalar z = q(1, 2);
  const FamilySpec h = make_pfq(alphas, betas, z);
  const auto V = residual_operators(h, 1).V;
  CHECK(V.coefficient(0) == z);
  CHECK(V.coefficient(1) == z * (alphas[0] + alphas[1] + alphas[2] - betas[0] - betas[1] - 1));
  // numeric cross-check of the ratio series at a small eps
  const Kind kind = Kind::real(40);
  const auto V6 = residual_operators(h, 6).V;
  const Scalar eps = Scalar::from_fraction(1, 200, kind);
  Scalar direct = z.to(kind) / (1 + eps);
  for (const auto& a : alphas) direct *= 1 + a.to(kind) * eps;
  for (const auto& b : betas) direct /= 1 + b.to(kind) * eps;
  CHECK(abs(series_evaluate(V6, eps) - direct) < Scalar::parse("1e-13", kind));
  CHECK_THROWS_AS(make_pfq({q(1)}, {q(2)}, q(1, 2)), DomainError);
  CHECK_THROWS_AS(make_pfq(alphas, betas, q(1)), DegenerateParameter);
}

TEST_CASE("E1 family") {
  const FamilySpec f = make_e1(q(5));
  CHECK(term(f, 2) == q(2, 25));
  CHECK(partial_sum(f, 2) == q(22, 25));
  CHECK(scale_at(f, 10) == q(3628800, 9765625));
  const auto ops = residual_operators(f, 2);
  CHECK(coeffs(ops.U) == std::vector<Scalar>{q(0), q(5), q(0)});
  CHECK(coeffs(ops.V) == std::vector<Scalar>{q(1), q(0), q(0)});
  CHECK_THROWS_AS(make_e1(q(0)), DegenerateParameter);
}

TEST_CASE("partial sums satisfy the inhomogeneous difference equation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pick(0, 29);
  const std::vector<FamilySpec> families{make_zeta(q(3)), paper_2f1(), make_e1(q(7, 2)),
                                         make_pfq({q(1, 2), q(2, 3), q(5, 4)}, {q(7, 3), q(9, 4)}, q(1, 2))};
  for (const auto& f : families) {
    for (int trial = 0; trial < 8; ++trial) {
      const long n = pick(rng);
      CHECK(partial_sum(f, n + 1) - partial_sum(f, n) == term(f, n + 1));
    }
  }
}

TEST_CASE("ratio series reproduces a_{n+2}/a_{n+1} to order M") {
  const FamilySpec f = paper_2f1();
  const Kind kind = Kind::real(50);
  for (int M : {2, 4}) {
    const auto V = residual_operators(f, M).V;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (long n = 20; n <= 60; ++n) {
      const Scalar eps = Scalar::one(kind) / Scalar::from_int(n + 1, kind);
      const Scalar diff = series_evaluate(V, eps) - term(f, n + 2, kind) / term(f, n + 1, kind);
      const double x = std::log(n + 1.0);
      const double y = log10_abs(diff) * std::log(10.0);
      sx += x, sy += y, sxx += x * x, sxy += x * y, ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    CAPTURE(M);
    CHECK(slope == doctest::Approx(-(M + 1.0)).epsilon(0.3 / (M + 1.0)));
  }
}
