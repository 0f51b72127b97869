#include "tailcut/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "tailcut/errors.hpp"

namespace tailcut {

namespace {

class BernoulliTable {
 public:
  mpq_class get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (k < static_cast<int>(values_.size())) return values_[k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(values_.size()) <= k) extend();
    return values_[k];
  }

 private:
  // Appends B_n for n = size, solving binom(n+1, n) B_n = -sum_{v<n} binom(n+1, v) B_v.
  void extend() {
    const int n = static_cast<int>(values_.size());
    if (n == 0) {
      values_.emplace_back(1);
      return;
    }
    mpq_class sum = 0;
    mpz_class binom = 1;  // binom(n+1, v), starting at v = 0
    for (int v = 0; v < n; ++v) {
      sum += mpq_class(binom) * values_[v];
      binom = binom * (n + 1 - v) / (v + 1);
    }
    mpq_class b = -sum / mpq_class(n + 1);
    b.canonicalize();
    if (n >= 3 && n % 2 == 1 && b != 0) {
      throw InvariantViolation("Bernoulli recurrence produced nonzero B_" + std::to_string(n));
    }
    values_.push_back(std::move(b));
  }

  std::shared_mutex mutex_;
  std::vector<mpq_class> values_;
};

class StirlingTable {
 public:
  mpz_class get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    return rows_[n][k];
  }

 private:
  // S(n+1, k) = S(n, k-1) - n S(n, k)
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<mpz_class> row(n + 1);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_[n - 1];
      row[0] = 0;
      for (int k = 1; k <= n; ++k) {
        mpz_class above = k <= n - 1 ? prev[k] : mpz_class(0);
        row[k] = prev[k - 1] - (n - 1) * above;
      }
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<mpz_class>> rows_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

mpq_class bernoulli_exact(int k) {
  if (k < 0) throw DomainError("bernoulli index must be nonnegative");
  return bernoulli_table().get(k);
}

Scalar bernoulli(int k) { return Scalar(bernoulli_exact(k)); }

mpz_class stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("stirling_first needs 0 <= k <= n, got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  }
  return stirling_table().get(n, k);
}

Scalar pochhammer(const Scalar& x, int m) {
  if (m < 0) throw DomainError("pochhammer order must be nonnegative");
  Scalar result = Scalar::one(x.kind());
  for (int i = 0; i < m; ++i) result *= x + i;
  return result;
}

Scalar binomial_coefficient(const Scalar& n, int k) {
  if (k < 0) throw DomainError("binomial_coefficient needs k >= 0");
  return pochhammer(n - (k - 1), k) / Scalar(mpq_class(factorial(k))).to(n.kind());
}

mpz_class factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace tailcut
