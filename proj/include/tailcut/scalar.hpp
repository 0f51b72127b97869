#pragma once

// Numeric scalar used throughout the library: either an exact rational
// (GMP) or a real carrying its own working precision (MPFR).

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace tailcut {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 30;

/// Arithmetic kind of a computation: exact rational or real with P decimal digits.
class Kind {
 public:
  static Kind exact() { return Kind(0); }
  static Kind real(int digits = kDefaultDigits);

  bool is_exact() const noexcept { return digits_ == 0; }
  bool is_real() const noexcept { return digits_ != 0; }
  /// Decimal digits of a real kind; 0 for exact.
  int digits() const noexcept { return digits_; }

  friend bool operator==(Kind, Kind) = default;

 private:
  explicit Kind(int digits) : digits_(digits) {}
  int digits_;
};

/// RAII owner of an mpfr_t with a working precision given in decimal digits.
class Real {
 public:
  explicit Real(int digits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int digits() const noexcept { return digits_; }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  static mpfr_prec_t bits_for_digits(int digits);

 private:
  mpfr_t value_;
  int digits_;
};

class Scalar {
 public:
  /// Exact zero.
  Scalar();
  Scalar(mpq_class q);
  explicit Scalar(Real r);

  static Scalar from_int(long value, Kind kind);
  static Scalar from_fraction(long num, long den, Kind kind = Kind::exact());
  static Scalar zero(Kind kind) { return from_int(0, kind); }
  static Scalar one(Kind kind) { return from_int(1, kind); }

  /// Parses "7", "-17/20", "-0.85" or "1e-3". In exact kind decimal literals
  /// are converted exactly; in real kind fractions are divided with rounding.
  static Scalar parse(std::string_view text, Kind kind);

  Kind kind() const;
  bool is_exact() const noexcept { return std::holds_alternative<mpq_class>(value_); }
  bool is_real() const noexcept { return !is_exact(); }

  const mpq_class& rational() const;
  const Real& real() const;

  /// Converts to another kind. Real to exact is rejected.
  Scalar to(Kind kind) const;

  bool is_zero() const;
  int sign() const;
  bool is_integer() const;
  /// Integer value if this is an integer that fits in a long.
  std::optional<long> as_long() const;
  double to_double() const;

  /// Exact: "p/q" (or "p"). Real: decimal scientific notation with `digits`
  /// significant digits (default: the value's working precision).
  std::string str(int digits = -1) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Integer operands adopt the kind of the Scalar operand.
  friend Scalar operator+(const Scalar& lhs, long rhs) { return lhs + from_int(rhs, lhs.kind()); }
  friend Scalar operator-(const Scalar& lhs, long rhs) { return lhs - from_int(rhs, lhs.kind()); }
  friend Scalar operator*(const Scalar& lhs, long rhs) { return lhs * from_int(rhs, lhs.kind()); }
  friend Scalar operator/(const Scalar& lhs, long rhs) { return lhs / from_int(rhs, lhs.kind()); }
  friend Scalar operator+(long lhs, const Scalar& rhs) { return from_int(lhs, rhs.kind()) + rhs; }
  friend Scalar operator-(long lhs, const Scalar& rhs) { return from_int(lhs, rhs.kind()) - rhs; }
  friend Scalar operator*(long lhs, const Scalar& rhs) { return from_int(lhs, rhs.kind()) * rhs; }
  friend Scalar operator/(long lhs, const Scalar& rhs) { return from_int(lhs, rhs.kind()) / rhs; }

  /// Same-kind comparison; mixing kinds throws KindMismatch.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::partial_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

 private:
  std::variant<mpq_class, Real> value_;
};

Scalar abs(const Scalar& x);
/// Integer power; exact stays exact (negative exponents allowed for nonzero base).
Scalar pow(const Scalar& base, long exponent);
/// General power. Exact operands require an integer exponent; otherwise real.
Scalar pow(const Scalar& base, const Scalar& exponent);
Scalar exp(const Scalar& x);
Scalar log(const Scalar& x);
Scalar pi(int digits);
/// log10 of |x| as a double (x != 0); useful for error bookkeeping.
double log10_abs(const Scalar& x);
/// Relative difference |a-b| / max(|a|,|b|), 0 when both are zero. Returned as a real.
Scalar relative_difference(const Scalar& a, const Scalar& b, int digits);

}  // namespace tailcut
