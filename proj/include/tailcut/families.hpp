#pragma once

// Series families whose truncation errors are approximated.
//
// Every family follows one convention: the remainder approximant is
//   r_n ~ scale(n) * S(eps),  eps = 1/(n + alpha),
// where the truncated power series S solves the residual identity
//   U(eps) S(eps) + V(eps) S(eps/(1+eps)) = 1 + O(eps^(m+1)),
// obtained by dividing the difference equation r_{n+1} - r_n = a_{n+1}
// by a_{n+1}: U = -scale(n)/a_{n+1}, V = scale(n+1)/a_{n+1}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tailcut/scalar.hpp"
#include "tailcut/series.hpp"

namespace tailcut {

enum class FamilyId { zeta, hyp2f1, pfq, e1 };

class FamilySpec {
 public:
  FamilyId id() const noexcept { return id_; }
  /// "zeta", "2f1", "pfq" or "e1".
  std::string name() const;
  /// Shift offset alpha in eps = 1/(n + alpha).
  int alpha() const noexcept { return id_ == FamilyId::zeta ? 2 : 1; }
  /// Kind of the parameters; the default kind of every evaluation.
  Kind kind() const noexcept { return kind_; }

  const Scalar& s() const;
  const Scalar& z() const;
  const std::vector<Scalar>& numerator_params() const noexcept { return numer_; }
  const std::vector<Scalar>& denominator_params() const noexcept { return denom_; }

  /// Named parameters in display order, e.g. {("a", 1/3), ("b", 7/5), ...}.
  std::vector<std::pair<std::string, Scalar>> parameters() const;
  /// "a=1/3,b=7/5,c=9/2,z=-17/20"
  std::string describe() const;
  /// Parameter whose value makes the solver pivots vanish ("s" for zeta, "z" otherwise).
  std::string pivot_parameter() const;
  /// True when terms, partial sums and scale are rational for exact parameters.
  bool has_rational_terms() const;

 private:
  friend FamilySpec make_zeta(const Scalar& s);
  friend FamilySpec make_pfq(const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas,
                             const Scalar& z);
  friend FamilySpec make_2f1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& z);
  friend FamilySpec make_e1(const Scalar& z);

  FamilySpec(FamilyId id, Kind kind) : id_(id), kind_(kind) {}

  FamilyId id_;
  Kind kind_;
  Scalar s_;
  Scalar z_;
  std::vector<Scalar> numer_;
  std::vector<Scalar> denom_;
};

/// Dirichlet series sum (v+1)^-s; rejects s = 1.
FamilySpec make_zeta(const Scalar& s);
/// Gauss 2F1(a, b; c; z); rejects z = 1, z = 0, c in {0, -1, ...} and terminating series.
FamilySpec make_2f1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& z);
/// p+1Fp(alphas; betas; z) with |alphas| = |betas| + 1.
FamilySpec make_pfq(const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas,
                    const Scalar& z);
/// Asymptotic series sum (-1/z)^v v! of z e^z E1(z); rejects z = 0.
FamilySpec make_e1(const Scalar& z);

/// Default evaluation kind: the parameter kind, except that exact zeta
/// families with non-integer s evaluate in Kind::real(kDefaultDigits).
Kind natural_kind(const FamilySpec& f);

/// a_n.
Scalar term(const FamilySpec& f, long n, std::optional<Kind> kind = std::nullopt);
/// s_n = a_0 + ... + a_n.
Scalar partial_sum(const FamilySpec& f, long n, std::optional<Kind> kind = std::nullopt);
/// Ansatz prefactor: (n+2)^(1-s) for zeta, a_{n+1} for 2F1/pFq, (-1/z)^n n! for E1.
Scalar scale_at(const FamilySpec& f, long n, std::optional<Kind> kind = std::nullopt);

struct ResidualOperators {
  LaurentSeries U;
  LaurentSeries V;
};

/// U and V through eps^order; asserts that U + V has no eps^-1 part.
ResidualOperators residual_operators(const FamilySpec& f, int order);

}  // namespace tailcut
