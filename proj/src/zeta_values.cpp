#include "qasym/zeta_values.hpp"

#include <mutex>
#include <vector>

namespace qasym {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // grows monotonically, entries immutable

// sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k
void extend_bernoulli(int n) {
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rational(1));
    for (int m = static_cast<int>(g_bernoulli.size()); m <= n; ++m) {
        Rational acc(0);
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * g_bernoulli[k];
        g_bernoulli.push_back(-acc / Rational(m + 1));
    }
}

}  // namespace

const Rational& bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: n must be >= 0");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(n);
    return g_bernoulli[n];
}

Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be >= 0");
    // Horner in x: B_n(x) = sum_k C(n,k) B_k x^{n-k}
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        acc *= x;
        acc += Rational(binomial(n, k)) * bernoulli(k);
    }
    return acc;
}

Rational zeta_neg(int n) {
    if (n < 0) throw std::invalid_argument("zeta_neg: n must be >= 0");
    if (n == 0) return Rational(-1, 2);
    return -bernoulli(n + 1) / Rational(n + 1);
}

Rational hurwitz_neg(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("hurwitz_neg: n must be >= 0");
    if (x.sign() <= 0 || x > Rational(1))
        throw std::invalid_argument("hurwitz_neg: x must satisfy 0 < x <= 1");
    return -bernoulli_poly(n + 1, x) / Rational(n + 1);
}

Rational lm_value(long l, long m, int n) {
    if (l <= 0 || m <= 0 || m >= l)
        throw std::invalid_argument("lm_value: need 0 < m < l");
    if (n < 0) throw std::invalid_argument("lm_value: n must be >= 0");
    const Rational a(m, 2 * l);
    const Rational b(l + m, 2 * l);
    return Rational(2 * l).pow(2L * n) * (hurwitz_neg(2 * n, a) - hurwitz_neg(2 * n, b));
}

}  // namespace qasym
