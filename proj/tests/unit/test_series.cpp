#include <random>

#include "doctest.h"
#include "tailcut/errors.hpp"
#include "tailcut/series.hpp"

using namespace tailcut;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_fraction(n, d); }

LaurentSeries ps(std::vector<Scalar> c) { return LaurentSeries(0, std::move(c)); }

std::vector<Scalar> coeffs(const LaurentSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

LaurentSeries random_series(std::mt19937_64& rng, int order, bool invertible = false) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Scalar> c;
  for (int k = 0; k <= order; ++k) c.push_back(q(num(rng), den(rng)));
  if (invertible && c[0].is_zero()) c[0] = q(1);
  return ps(std::move(c));
}

// S(eps/(1-eps)), the inverse of shift_substitute.
LaurentSeries reverse_substitute(const LaurentSeries& s, int order) {
  const Kind kind = s.kind();
  std::vector<Scalar> psi(order + 1, Scalar::one(kind));
  psi[0] = Scalar::zero(kind);
  const LaurentSeries map = ps(psi);
  LaurentSeries acc = LaurentSeries::constant(s.coefficient(s.order()), order);
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * map + LaurentSeries::constant(s.coefficient(k), order);
  return acc;
}

}  // namespace

TEST_CASE("series_add") {
  CHECK(coeffs(series_add(ps({q(1), q(1)}), ps({q(1), q(-1)}))) == std::vector<Scalar>{q(2), q(0)});
  const LaurentSeries laurent = series_add(LaurentSeries(-1, {q(1), q(0)}), LaurentSeries(-1, {q(-1), q(0), q(1)}));
  CHECK(laurent.base_order() == -1);
  CHECK(laurent.order() == 0);
  CHECK(laurent.coefficient(-1) == q(0));
  const LaurentSeries laurent_full = series_add(LaurentSeries(-1, {q(1), q(0), q(0)}), LaurentSeries(-1, {q(-1), q(0), q(1)}));
  CHECK(laurent_full.coefficient(-1) == q(0));
  CHECK(laurent_full.coefficient(1) == q(1));
  const LaurentSeries truncated = series_add(ps({q(1), q(2), q(3)}), ps({q(1), q(1)}));
  CHECK(truncated.order() == 1);
  CHECK(coeffs(truncated) == std::vector<Scalar>{q(2), q(3)});
  CHECK_THROWS_AS(series_add(ps({q(1)}), ps({Scalar::one(Kind::real(30))})), KindMismatch);
}

TEST_CASE("series_mul") {
  CHECK(coeffs(series_mul(ps({q(1), q(1), q(0)}), ps({q(1), q(-1), q(0)}))) == std::vector<Scalar>{q(1), q(0), q(-1)});
  const LaurentSeries inv = LaurentSeries(-1, {q(1), q(0), q(0)});
  const LaurentSeries prod = series_mul(inv, ps({q(0), q(1), q(1)}));
  CHECK(prod.base_order() == -1);
  CHECK(prod.coefficient(-1) == q(0));
  CHECK(prod.coefficient(0) == q(1));
  CHECK(prod.coefficient(1) == q(1));
  CHECK(coeffs(series_mul(ps({q(1), q(1)}), ps({q(1), q(1)}))) == std::vector<Scalar>{q(1), q(2)});
  CHECK_THROWS(series_mul(inv, inv));
}

TEST_CASE("series_div") {
  const LaurentSeries geo = series_div(ps({q(1), q(0), q(0), q(0)}), ps({q(1), q(1), q(0), q(0)}));
  CHECK(coeffs(geo) == std::vector<Scalar>{q(1), q(-1), q(1), q(-1)});
  CHECK(coeffs(series_div(ps({q(1), q(1)}), ps({q(1), q(1)}))) == std::vector<Scalar>{q(1), q(0)});
  CHECK_THROWS_AS(series_div(ps({q(1), q(1)}), ps({q(0), q(1)})), DomainError);

  // z(1+a eps)(1+b eps)/((1+c eps)(1+eps)) = z + z(a+b-c-1) eps + ...
  const Scalar a = q(1, 3), b = q(7, 5), c = q(9, 2), z = q(-17, 20);
  const LaurentSeries num = LaurentSeries::constant(z, 1) * ps({q(1), a}) * ps({q(1), b});
  const LaurentSeries den = ps({q(1), c}) * ps({q(1), q(1)});
  const LaurentSeries ratio = series_div(num, den);
  CHECK(ratio.coefficient(0) == z);
  CHECK(ratio.coefficient(1) == z * (a + b - c - 1));
  const LaurentSeries num6 = LaurentSeries::constant(z, 6) * ps({q(1), a, q(0), q(0), q(0), q(0), q(0)}) *
                             ps({q(1), b, q(0), q(0), q(0), q(0), q(0)});
  const LaurentSeries den6 = ps({q(1), c, q(0), q(0), q(0), q(0), q(0)}) * ps({q(1), q(1), q(0), q(0), q(0), q(0), q(0)});
  const Scalar eps = q(1, 1000);
  const Scalar direct = z * (1 + a * eps) * (1 + b * eps) / ((1 + c * eps) * (1 + eps));
  CHECK(abs(series_evaluate(series_div(num6, den6), eps) - direct) < q(1, 1000000000000L));
}

TEST_CASE("binomial_series") {
  CHECK(coeffs(binomial_series(q(-1), 3)) == std::vector<Scalar>{q(1), q(-1), q(1), q(-1)});
  CHECK(coeffs(binomial_series(q(1), 3)) == std::vector<Scalar>{q(1), q(1), q(0), q(0)});
  CHECK(coeffs(binomial_series(q(1, 2), 3)) == std::vector<Scalar>{q(1), q(1, 2), q(-1, 8), q(1, 16)});
}

TEST_CASE("shift_substitute") {
  CHECK(coeffs(shift_substitute(ps({q(0), q(1), q(0), q(0)}), 3)) == std::vector<Scalar>{q(0), q(1), q(-1), q(1)});
  CHECK(coeffs(shift_substitute(ps({q(1)}), 0)) == std::vector<Scalar>{q(1)});
  CHECK(coeffs(shift_substitute(ps({q(0), q(0), q(1), q(0), q(0)}), 4)) ==
        std::vector<Scalar>{q(0), q(0), q(1), q(-2), q(3)});
  CHECK_THROWS_AS(shift_substitute(LaurentSeries(-1, {q(1), q(0)}), 0), DomainError);
}

TEST_CASE("series_evaluate and coefficient_at") {
  CHECK(series_evaluate(ps({q(1), q(1)}), q(1, 2)) == q(3, 2));
  CHECK(series_evaluate(LaurentSeries(-1, {q(1), q(0)}), q(1, 4)) == q(4));
  CHECK(series_evaluate(ps({q(1), q(-5), q(20)}), q(1, 11)) == q(86, 121));
  const Scalar r = series_evaluate(ps({q(1), q(-5), q(20)}), Scalar::from_fraction(1, 11, Kind::real(40)));
  CHECK(abs(r - Scalar::parse("0.710743801652892561983471074380165289256", Kind::real(40))) <
        Scalar::parse("1e-35", Kind::real(40)));
  CHECK_THROWS_AS(series_evaluate(LaurentSeries(-1, {q(1), q(0)}), q(0)), DomainError);
  CHECK(coefficient_at(ps({q(1), q(2)}), 1) == q(2));
  CHECK(coefficient_at(LaurentSeries(-1, {q(1), q(3)}), -1) == q(1));
  const Scalar s = q(5, 2);
  CHECK(coefficient_at(binomial_series(1 - s, 2), 1) == 1 - s);
  CHECK_THROWS_AS(coefficient_at(ps({q(1), q(2)}), 2), DomainError);
}

TEST_CASE("ring laws on random exact series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 1 + trial % 6;
    const auto x = random_series(rng, order), y = random_series(rng, order), z = random_series(rng, order);
    CHECK(coeffs(x + y) == coeffs(y + x));
    CHECK(coeffs(x * y) == coeffs(y * x));
    CHECK(coeffs((x + y) + z) == coeffs(x + (y + z)));
    CHECK(coeffs((x * y) * z) == coeffs(x * (y * z)));
    CHECK(coeffs(x * (y + z)) == coeffs(x * y + x * z));
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int order = 1 + trial % 7;
    const auto a = random_series(rng, order), b = random_series(rng, order, true);
    CHECK(coeffs(series_mul(series_div(a, b), b)) == coeffs(a));
  }
}

TEST_CASE("shift and reverse map compose to the identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = 1 + trial % 8;
    const auto s = random_series(rng, order);
    CHECK(coeffs(reverse_substitute(shift_substitute(s, order), order)) == coeffs(s));
  }
}

TEST_CASE("real kind agrees with exact kind") {
  std::mt19937_64 rng(17);
  for (int digits : {30, 50}) {
    const Kind kind = Kind::real(digits);
    const Scalar tol = pow(Scalar::from_int(10, kind), 5L - digits);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_series(rng, 6), b = random_series(rng, 6, true);
      auto to_real = [&](const LaurentSeries& s) {
        std::vector<Scalar> c;
        for (const auto& x : s.coefficients()) c.push_back(x.to(kind));
        return ps(c);
      };
      const auto exact = series_div(shift_substitute(a * b, 6), b);
      const auto real = series_div(shift_substitute(to_real(a) * to_real(b), 6), to_real(b));
      for (int k = 0; k <= 6; ++k) {
        const Scalar e = exact.coefficient(k).to(kind);
        CHECK(abs(real.coefficient(k) - e) <= tol * std::max(abs(e), Scalar::one(kind)));
      }
    }
  }
}
