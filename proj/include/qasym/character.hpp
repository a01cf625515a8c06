#pragma once

#include "qasym/rational.hpp"

namespace qasym {

// Kronecker symbol (d|n) for n >= 0.
int kronecker(long d, unsigned long n);

bool is_fundamental_discriminant(long d);

// Real primitive nonprincipal Dirichlet character, encoded by its fundamental
// discriminant d. Modulus f = |d|; the character is even iff d > 0.
class CharacterSpec {
public:
    explicit CharacterSpec(long d);

    long discriminant() const { return d_; }
    long modulus() const { return f_; }
    bool is_even() const { return d_ > 0; }

    int chi(unsigned long n) const { return kronecker(d_, n); }

private:
    long d_;
    long f_;
};

// L(-n, chi) = -B_{n+1,chi}/(n+1), with generalized Bernoulli numbers taken
// from the exact series  sum_{a=1}^{f} chi(a) t e^{at} / (e^{ft} - 1).
// Memoized per (d, n).
Rational l_chi_neg(const CharacterSpec& chi, int n);

}  // namespace qasym
