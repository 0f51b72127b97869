#pragma once

// Exact combinatorial numbers. Bernoulli and Stirling tables are process-wide
// memoized caches that only ever grow; extension is serialized internally.

#include <gmpxx.h>

#include "tailcut/scalar.hpp"

namespace tailcut {

/// B_k from sum_{v=0}^{n} binom(n+1, v) B_v = 0 with B_0 = 1 (so B_1 = -1/2).
Scalar bernoulli(int k);
mpq_class bernoulli_exact(int k);

/// Stirling number of the first kind: coefficient of z^k in (z - n + 1)_n.
mpz_class stirling_first(int n, int k);

/// Rising factorial x (x+1) ... (x+m-1); 1 for m = 0.
Scalar pochhammer(const Scalar& x, int m);

/// pochhammer(n - k + 1, k) / k!
Scalar binomial_coefficient(const Scalar& n, int k);

mpz_class factorial(int n);

}  // namespace tailcut
