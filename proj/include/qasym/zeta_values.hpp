#pragma once

#include "qasym/rational.hpp"

namespace qasym {

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Bernoulli number B_n under the convention B_1 = -1/2. Memoized, thread-safe.
const Rational& bernoulli(int n);

// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Rational bernoulli_poly(int n, const Rational& x);

// zeta(-n) for n >= 0. zeta(0) = -1/2 is special-cased; otherwise -B_{n+1}/(n+1).
Rational zeta_neg(int n);

// Hurwitz zeta(-n, x) = -B_{n+1}(x)/(n+1), restricted to 0 < x <= 1.
Rational hurwitz_neg(int n, const Rational& x);

// L_{l,m}(-2n) = (2l)^{2n} * (zeta(-2n, m/2l) - zeta(-2n, (l+m)/2l)),
// for 0 < m < l and n >= 0.
Rational lm_value(long l, long m, int n);

}  // namespace qasym
