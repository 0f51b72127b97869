#include "tailcut/families.hpp"

#include <sstream>

#include "tailcut/errors.hpp"

namespace tailcut {

namespace {

bool is_nonpositive_integer(const Scalar& x) { return x.is_integer() && x.sign() <= 0; }

Kind evaluation_kind(const FamilySpec& f, std::optional<Kind> kind) {
  const Kind k = kind.value_or(natural_kind(f));
  if (k.is_exact() && !f.kind().is_exact()) {
    throw KindMismatch("exact evaluation requested for a family with real parameters");
  }
  if (k.is_exact() && !f.has_rational_terms()) {
    throw DomainError("zeta terms are irrational for non-integer s; request a real kind");
  }
  return k;
}

// a_{v+1} / a_v for hypergeometric families.
Scalar hyper_ratio(const FamilySpec& f, long v, Kind kind) {
  Scalar num = f.z().to(kind);
  for (const auto& a : f.numerator_params()) num *= a.to(kind) + v;
  Scalar den = Scalar::from_int(v + 1, kind);
  for (const auto& b : f.denominator_params()) den *= b.to(kind) + v;
  return num / den;
}

Scalar e1_ratio(const FamilySpec& f, long v, Kind kind) {
  // a_{v+1}/a_v = -(v+1)/z
  return Scalar::from_int(-(v + 1), kind) / f.z().to(kind);
}

Scalar zeta_term(const FamilySpec& f, long v, Kind kind) {
  return pow(Scalar::from_int(v + 1, kind), -f.s().to(kind));
}

}  // namespace

std::string FamilySpec::name() const {
  switch (id_) {
    case FamilyId::zeta:
      return "zeta";
    case FamilyId::hyp2f1:
      return "2f1";
    case FamilyId::pfq:
      return "pfq";
    case FamilyId::e1:
      return "e1";
  }
  return "unknown";
}

const Scalar& FamilySpec::s() const {
  if (id_ != FamilyId::zeta) throw DomainError("family " + name() + " has no parameter s");
  return s_;
}

const Scalar& FamilySpec::z() const {
  if (id_ == FamilyId::zeta) throw DomainError("family zeta has no parameter z");
  return z_;
}

std::vector<std::pair<std::string, Scalar>> FamilySpec::parameters() const {
  std::vector<std::pair<std::string, Scalar>> out;
  switch (id_) {
    case FamilyId::zeta:
      out.emplace_back("s", s_);
      break;
    case FamilyId::hyp2f1:
      out.emplace_back("a", numer_[0]);
      out.emplace_back("b", numer_[1]);
      out.emplace_back("c", denom_[0]);
      out.emplace_back("z", z_);
      break;
    case FamilyId::pfq:
      for (std::size_t i = 0; i < numer_.size(); ++i) out.emplace_back("alpha" + std::to_string(i + 1), numer_[i]);
      for (std::size_t i = 0; i < denom_.size(); ++i) out.emplace_back("beta" + std::to_string(i + 1), denom_[i]);
      out.emplace_back("z", z_);
      break;
    case FamilyId::e1:
      out.emplace_back("z", z_);
      break;
  }
  return out;
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : parameters()) {
    if (!first) os << ',';
    first = false;
    os << key << '=' << (value.is_exact() ? value.str() : value.str(17));
  }
  return os.str();
}

Kind natural_kind(const FamilySpec& f) {
  if (f.kind().is_real()) return f.kind();
  return f.has_rational_terms() ? Kind::exact() : Kind::real(kDefaultDigits);
}

std::string FamilySpec::pivot_parameter() const { return id_ == FamilyId::zeta ? "s" : "z"; }

bool FamilySpec::has_rational_terms() const {
  if (!kind_.is_exact()) return false;
  return id_ != FamilyId::zeta || s_.is_integer();
}

FamilySpec make_zeta(const Scalar& s) {
  FamilySpec f(FamilyId::zeta, s.kind());
  if (s == Scalar::one(s.kind())) {
    throw DegenerateParameter("s", "pivot degenerate at s=1 (leading coefficient 1-s vanishes)");
  }
  f.s_ = s;
  return f;
}

FamilySpec make_pfq(const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas, const Scalar& z) {
  if (alphas.size() != betas.size() + 1) {
    throw DomainError("pFq family needs exactly one more numerator than denominator parameter");
  }
  std::vector<const Scalar*> all{&z};
  for (const auto& a : alphas) all.push_back(&a);
  for (const auto& b : betas) all.push_back(&b);
  Kind kind = z.kind();
  for (const Scalar* v : all) {
    if (v->is_exact() != z.is_exact()) {
      throw KindMismatch("family parameters must all be exact or all be real");
    }
    if (v->is_real() && v->kind().digits() > kind.digits()) kind = v->kind();
  }

  if (z.is_zero()) throw DegenerateParameter("z", "degenerate at z=0 (all terms beyond a_0 vanish)");
  if (z == Scalar::one(z.kind())) {
    throw DegenerateParameter("z", "pivot degenerate at z=1 (leading coefficient z-1 vanishes)");
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (is_nonpositive_integer(betas[i])) {
      throw DegenerateParameter(betas.size() == 1 ? "c" : "beta" + std::to_string(i + 1), "denominator parameter " + betas[i].str() + " is a nonpositive integer");
    }
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (is_nonpositive_integer(alphas[i])) {
      throw DegenerateParameter(alphas.size() == 2 ? std::string(i == 0 ? "a" : "b") : "alpha" + std::to_string(i + 1), "numerator parameter " + alphas[i].str() +
                                         " is a nonpositive integer (terminating series)");
    }
  }
  FamilySpec f(FamilyId::pfq, kind);
  f.numer_ = alphas;
  f.denom_ = betas;
  f.z_ = z;
  return f;
}

FamilySpec make_2f1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& z) {
  FamilySpec f = make_pfq({a, b}, {c}, z);
  f.id_ = FamilyId::hyp2f1;
  return f;
}

FamilySpec make_e1(const Scalar& z) {
  if (z.is_zero()) throw DegenerateParameter("z", "degenerate at z=0");
  FamilySpec f(FamilyId::e1, z.kind());
  f.z_ = z;
  return f;
}

Scalar term(const FamilySpec& f, long n, std::optional<Kind> kind) {
  if (n < 0) throw DomainError("term index must be nonnegative");
  const Kind k = evaluation_kind(f, kind);
  if (f.id() == FamilyId::zeta) return zeta_term(f, n, k);
  Scalar t = Scalar::one(k);
  for (long v = 0; v < n; ++v) {
    t *= f.id() == FamilyId::e1 ? e1_ratio(f, v, k) : hyper_ratio(f, v, k);
  }
  return t;
}

Scalar partial_sum(const FamilySpec& f, long n, std::optional<Kind> kind) {
  if (n < 0) throw DomainError("partial sum index must be nonnegative");
  const Kind k = evaluation_kind(f, kind);
  Scalar sum = Scalar::zero(k);
  if (f.id() == FamilyId::zeta) {
    for (long v = 0; v <= n; ++v) sum += zeta_term(f, v, k);
    return sum;
  }
  Scalar t = Scalar::one(k);
  for (long v = 0; v <= n; ++v) {
    sum += t;
    if (v < n) t *= f.id() == FamilyId::e1 ? e1_ratio(f, v, k) : hyper_ratio(f, v, k);
  }
  return sum;
}

Scalar scale_at(const FamilySpec& f, long n, std::optional<Kind> kind) {
  if (n < 0) throw DomainError("scale index must be nonnegative");
  const Kind k = evaluation_kind(f, kind);
  switch (f.id()) {
    case FamilyId::zeta:
      return pow(Scalar::from_int(n + 2, k), 1 - f.s().to(k));
    case FamilyId::hyp2f1:
    case FamilyId::pfq:
      return term(f, n + 1, k);
    case FamilyId::e1:
      return term(f, n, k);
  }
  throw InvariantViolation("unknown family");
}

ResidualOperators residual_operators(const FamilySpec& f, int order) {
  if (order < 0) throw DomainError("series order must be nonnegative");
  const Kind kind = f.kind();
  const Scalar one = Scalar::one(kind);

  auto result = [&]() -> ResidualOperators {
    switch (f.id()) {
      case FamilyId::zeta: {
        // U = -1/eps, V = (1+eps)^(1-s)/eps
        const LaurentSeries U = -LaurentSeries::monomial(-1, kind, order);
        const LaurentSeries W = binomial_series(one - f.s(), order + 1);
        const auto c = W.coefficients();
        return {U, LaurentSeries(-1, std::vector<Scalar>(c.begin(), c.end()))};
      }
      case FamilyId::hyp2f1:
      case FamilyId::pfq: {
        // U = -1, V = a_{n+2}/a_{n+1} = z prod(1 + alpha eps) / (prod(1 + beta eps) (1 + eps))
        auto linear = [&](const Scalar& c) {
          std::vector<Scalar> coeffs(order + 1, Scalar::zero(kind));
          coeffs[0] = one;
          if (order >= 1) coeffs[1] = c;
          return LaurentSeries(0, std::move(coeffs));
        };
        LaurentSeries num = LaurentSeries::constant(f.z(), order);
        for (const auto& a : f.numerator_params()) num = num * linear(a);
        LaurentSeries den = linear(one);
        for (const auto& b : f.denominator_params()) den = den * linear(b);
        return {LaurentSeries::constant(-one, order), series_div(num, den)};
      }
      case FamilyId::e1: {
        // U = z eps, V = 1
        std::vector<Scalar> u(order + 1, Scalar::zero(kind));
        if (order >= 1) u[1] = f.z();
        return {LaurentSeries(0, std::move(u)), LaurentSeries::constant(one, order)};
      }
    }
    throw InvariantViolation("unknown family");
  }();

  if (result.U.base_order() < 0 || result.V.base_order() < 0) {
    const LaurentSeries sum = result.U + result.V;
    if (sum.base_order() < 0 && !sum.coefficient(-1).is_zero()) {
      throw InvariantViolation("residual operators of family " + f.name() + " leave an eps^-1 term");
    }
  }
  return result;
}

}  // namespace tailcut
