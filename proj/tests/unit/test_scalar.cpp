#include "doctest.h"
#include "tailcut/errors.hpp"
#include "tailcut/scalar.hpp"

using namespace tailcut;

TEST_CASE("exact literals are normalized") {
  const Scalar x = Scalar::parse("6/-4", Kind::exact());
  CHECK(x.rational().get_num() == -3);
  CHECK(x.rational().get_den() == 2);
  CHECK(Scalar::parse("0.85", Kind::exact()) == Scalar::from_fraction(17, 20));
  CHECK(Scalar::parse("-12", Kind::exact()).str() == "-12");
  CHECK_THROWS_AS(Scalar::parse("1/0", Kind::exact()), DomainError);
}

TEST_CASE("kinds never mix implicitly") {
  const Scalar e = Scalar::from_fraction(1, 3);
  const Scalar r = Scalar::from_fraction(1, 3, Kind::real(40));
  CHECK_THROWS_AS(e + r, KindMismatch);
  CHECK_THROWS_AS(e * r, KindMismatch);
  CHECK_THROWS_AS((void)(e == r), KindMismatch);
  CHECK_THROWS_AS(r.to(Kind::exact()), KindMismatch);
  CHECK(e.to(Kind::real(40)) == r);
  CHECK_THROWS(Kind::real(29));
}

TEST_CASE("exact arithmetic") {
  const Scalar a = Scalar::from_fraction(2, 3);
  const Scalar b = Scalar::from_fraction(-5, 7);
  CHECK(a + b == Scalar::from_fraction(-1, 21));
  CHECK(a * b == Scalar::from_fraction(-10, 21));
  CHECK(a / b == Scalar::from_fraction(-14, 15));
  CHECK(pow(a, -3) == Scalar::from_fraction(27, 8));
  CHECK(abs(b) == Scalar::from_fraction(5, 7));
  CHECK(b < a);
  CHECK_THROWS_AS(a / Scalar::zero(Kind::exact()), DomainError);
}

TEST_CASE("real arithmetic is correctly rounded: P against 2P digits") {
  for (int digits : {30, 50, 80}) {
    auto value = [](int p) {
      const Kind k = Kind::real(p);
      const Scalar x = Scalar::from_fraction(1, 7, k);
      return exp(x) * log(Scalar::from_int(3, k)) / (1 + x * x) - pow(Scalar::from_fraction(5, 3, k), x);
    };
    const Scalar lo = value(digits);
    const Scalar hi = value(2 * digits);
    CHECK(relative_difference(lo, hi, 2 * digits) <= pow(Scalar::from_int(10, Kind::real(2 * digits)), 2L - digits));
  }
}

TEST_CASE("pi at working precision") {
  const Scalar p = pi(60);
  CHECK(p.str(20) == "3.1415926535897932385e+00");
}

TEST_CASE("string forms") {
  CHECK(Scalar::from_fraction(-3, 4).str() == "-3/4");
  CHECK(Scalar::parse("0.25", Kind::real(30)).str(3) == "2.50e-01");
  CHECK(Scalar::from_int(7, Kind::exact()).as_long() == 7);
  CHECK_FALSE(Scalar::from_fraction(7, 2).as_long().has_value());
}
