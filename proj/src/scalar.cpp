#include "tailcut/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>
#include <string>
#include <utility>

#include "tailcut/errors.hpp"

namespace tailcut {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

std::string trimmed(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(" \t\n\r");
  return std::string(text.substr(first, last - first + 1));
}

mpz_class parse_integer(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (digits.empty() || digits == "-") throw DomainError("invalid integer literal '" + text + "'");
  for (std::size_t i = (digits.front() == '-' ? 1 : 0); i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw DomainError("invalid integer literal '" + text + "'");
    }
  }
  return mpz_class(digits, 10);
}

// Exact value of a decimal literal such as -0.85 or 1.5e-3.
mpq_class parse_decimal_exact(const std::string& text) {
  std::string body = text;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    const std::string exp_text = body.substr(e + 1);
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') throw DomainError("invalid decimal literal '" + text + "'");
    body = body.substr(0, e);
  }
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.erase(0, 1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char ch : body) {
    if (ch == '.') {
      if (seen_point) throw DomainError("invalid decimal literal '" + text + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else {
      throw DomainError("invalid decimal literal '" + text + "'");
    }
  }
  if (digits.empty()) throw DomainError("invalid decimal literal '" + text + "'");
  mpq_class value(mpz_class(digits, 10));
  long shift = exponent - fraction_digits;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    value *= ten_power;
  } else {
    value /= ten_power;
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

Real to_real(const mpq_class& q, int digits) {
  Real r(digits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

template <typename ExactOp, typename RealOp>
void apply_binary(std::variant<mpq_class, Real>& lhs, const std::variant<mpq_class, Real>& rhs,
                  ExactOp exact_op, RealOp real_op) {
  if (lhs.index() != rhs.index()) {
    throw KindMismatch("arithmetic between exact and real scalars; convert explicitly");
  }
  if (auto* q = std::get_if<mpq_class>(&lhs)) {
    exact_op(*q, std::get<mpq_class>(rhs));
    return;
  }
  auto& a = std::get<Real>(lhs);
  const auto& b = std::get<Real>(rhs);
  Real result(std::max(a.digits(), b.digits()));
  real_op(result.get(), a.get(), b.get());
  a = std::move(result);
}

}  // namespace

Kind Kind::real(int digits) {
  if (digits < kMinDigits) {
    throw DomainError("real precision must be at least " + std::to_string(kMinDigits) +
                      " digits, got " + std::to_string(digits));
  }
  return Kind(digits);
}

// ---------------------------------------------------------------------------
// Real

mpfr_prec_t Real::bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4;
}

Real::Real(int digits) : digits_(digits) {
  if (digits < 1) throw DomainError("real precision must be positive");
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(digits_, other.digits_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar() : value_(mpq_class(0)) {}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar::Scalar(Real r) : value_(std::move(r)) {}

Scalar Scalar::from_int(long value, Kind kind) {
  if (kind.is_exact()) return Scalar(mpq_class(value));
  Real r(kind.digits());
  mpfr_set_si(r.get(), value, MPFR_RNDN);
  return Scalar(std::move(r));
}

Scalar Scalar::from_fraction(long num, long den, Kind kind) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  if (kind.is_exact()) return Scalar(std::move(q));
  return Scalar(to_real(q, kind.digits()));
}

Scalar Scalar::parse(std::string_view raw, Kind kind) {
  const std::string text = trimmed(raw);
  if (text.empty()) throw DomainError("empty numeric literal");
  mpq_class exact;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    mpz_class num = parse_integer(trimmed(text.substr(0, slash)));
    mpz_class den = parse_integer(trimmed(text.substr(slash + 1)));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    exact = mpq_class(num, den);
    exact.canonicalize();
  } else if (text.find_first_of(".eE") != std::string::npos) {
    if (kind.is_real()) {
      Real r(kind.digits());
      if (mpfr_set_str(r.get(), text.c_str(), 10, MPFR_RNDN) != 0) {
        throw DomainError("invalid decimal literal '" + text + "'");
      }
      return Scalar(std::move(r));
    }
    exact = parse_decimal_exact(text);
  } else {
    exact = mpq_class(parse_integer(text));
  }
  if (kind.is_exact()) return Scalar(std::move(exact));
  return Scalar(to_real(exact, kind.digits()));
}

Kind Scalar::kind() const {
  if (is_exact()) return Kind::exact();
  return Kind::real(std::max(std::get<Real>(value_).digits(), kMinDigits));
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw KindMismatch("rational() called on a real scalar");
  return std::get<mpq_class>(value_);
}

const Real& Scalar::real() const {
  if (is_exact()) throw KindMismatch("real() called on an exact scalar");
  return std::get<Real>(value_);
}

Scalar Scalar::to(Kind target) const {
  if (target.is_exact()) {
    if (!is_exact()) throw KindMismatch("cannot convert a real scalar to the exact kind");
    return *this;
  }
  if (is_exact()) return Scalar(to_real(std::get<mpq_class>(value_), target.digits()));
  Real r(target.digits());
  mpfr_set(r.get(), std::get<Real>(value_).get(), MPFR_RNDN);
  return Scalar(std::move(r));
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  return mpfr_sgn(std::get<Real>(value_).get());
}

bool Scalar::is_integer() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_den() == 1;
  return mpfr_integer_p(std::get<Real>(value_).get()) != 0;
}

std::optional<long> Scalar::as_long() const {
  if (!is_integer()) return std::nullopt;
  if (is_exact()) {
    const mpz_class& num = std::get<mpq_class>(value_).get_num();
    if (!num.fits_slong_p()) return std::nullopt;
    return num.get_si();
  }
  const auto& r = std::get<Real>(value_);
  if (!mpfr_fits_slong_p(r.get(), MPFR_RNDN)) return std::nullopt;
  return mpfr_get_si(r.get(), MPFR_RNDN);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return mpfr_get_d(std::get<Real>(value_).get(), MPFR_RNDN);
}

std::string Scalar::str(int digits) const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  const auto& r = std::get<Real>(value_);
  const int shown = digits > 0 ? digits : r.digits();
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*Re", shown - 1, r.get()) < 0) {
    throw Error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, void (*)(char*)> owner(buffer, [](char* p) { mpfr_free_str(p); });
  return std::string(buffer);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  const auto& r = std::get<Real>(value_);
  Real out(r.digits());
  mpfr_neg(out.get(), r.get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  apply_binary(
      value_, rhs.value_, [](mpq_class& a, const mpq_class& b) { a += b; },
      [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) { mpfr_add(out, a, b, MPFR_RNDN); });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  apply_binary(
      value_, rhs.value_, [](mpq_class& a, const mpq_class& b) { a -= b; },
      [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) { mpfr_sub(out, a, b, MPFR_RNDN); });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  apply_binary(
      value_, rhs.value_, [](mpq_class& a, const mpq_class& b) { a *= b; },
      [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) { mpfr_mul(out, a, b, MPFR_RNDN); });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  apply_binary(
      value_, rhs.value_, [](mpq_class& a, const mpq_class& b) { a /= b; },
      [](mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b) { mpfr_div(out, a, b, MPFR_RNDN); });
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return (lhs <=> rhs) == std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.value_.index() != rhs.value_.index()) {
    throw KindMismatch("comparison between exact and real scalars; convert explicitly");
  }
  int c = 0;
  if (lhs.is_exact()) {
    c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
  } else {
    mpfr_srcptr a = std::get<Real>(lhs.value_).get();
    mpfr_srcptr b = std::get<Real>(rhs.value_).get();
    if (mpfr_nan_p(a) || mpfr_nan_p(b)) return std::partial_ordering::unordered;
    c = mpfr_cmp(a, b);
  }
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

// ---------------------------------------------------------------------------
// Free functions

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0 && base.is_zero()) throw DomainError("zero raised to a negative power");
  if (base.is_exact()) {
    const mpq_class& q = base.rational();
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
    return exponent < 0 ? Scalar(mpq_class(den, num)) : Scalar(mpq_class(num, den));
  }
  const Real& r = base.real();
  Real out(r.digits());
  mpfr_pow_si(out.get(), r.get(), exponent, MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar pow(const Scalar& base, const Scalar& exponent) {
  if (exponent.is_exact()) {
    if (auto e = exponent.as_long()) return pow(base, *e);
    if (base.is_exact()) {
      throw KindMismatch("non-integer power of an exact scalar is not exact; use a real kind");
    }
    return pow(base, exponent.to(base.kind()));
  }
  if (base.is_exact()) return pow(base.to(exponent.kind()), exponent);
  const Real& b = base.real();
  const Real& e = exponent.real();
  Real out(std::max(b.digits(), e.digits()));
  mpfr_pow(out.get(), b.get(), e.get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar exp(const Scalar& x) {
  if (x.is_exact()) throw KindMismatch("exp requires a real scalar");
  Real out(x.real().digits());
  mpfr_exp(out.get(), x.real().get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar log(const Scalar& x) {
  if (x.is_exact()) throw KindMismatch("log requires a real scalar");
  if (x.sign() <= 0) throw DomainError("log of a nonpositive value");
  Real out(x.real().digits());
  mpfr_log(out.get(), x.real().get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

Scalar pi(int digits) {
  Real out(digits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return Scalar(std::move(out));
}

double log10_abs(const Scalar& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  if (x.is_exact()) {
    const mpq_class& q = x.rational();
    long enum_exp = 0, eden_exp = 0;
    double num = mpz_get_d_2exp(&enum_exp, q.get_num_mpz_t());
    double den = mpz_get_d_2exp(&eden_exp, q.get_den_mpz_t());
    return std::log10(std::fabs(num / den)) + (enum_exp - eden_exp) * std::log10(2.0);
  }
  long e = 0;
  double mant = mpfr_get_d_2exp(&e, x.real().get(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + e * std::log10(2.0);
}

Scalar relative_difference(const Scalar& a, const Scalar& b, int digits) {
  const Kind kind = Kind::real(std::max(digits, kMinDigits));
  Scalar x = a.to(kind);
  Scalar y = b.to(kind);
  Scalar scale = std::max(abs(x), abs(y));
  if (scale.is_zero()) return Scalar::zero(kind);
  return abs(x - y) / scale;
}

}  // namespace tailcut
