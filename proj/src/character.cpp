#include "qasym/character.hpp"

#include "qasym/zeta_values.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qasym {

int kronecker(long d, unsigned long n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    long a = d;
    unsigned long b = n;
    if ((a % 2 == 0) && (b % 2 == 0)) return 0;

    int k = 1;
    unsigned long v = 0;
    while (b % 2 == 0) { b /= 2; ++v; }
    if (v % 2 == 1) {
        long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) k = -1;  // am8 in {1,7} leaves k; even a was caught above
    }
    // b now odd; fold the sign of a through (-1|b) = (-1)^{(b-1)/2}
    if (a < 0) {
        a = -a;
        if (b % 4 == 3) k = -k;
    }
    // Jacobi symbol (a|b), a >= 0, b odd > 0
    unsigned long ua = static_cast<unsigned long>(a) % b;
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            unsigned long bm8 = b % 8;
            if (bm8 == 3 || bm8 == 5) k = -k;
        }
        std::swap(ua, b);
        if (ua % 4 == 3 && b % 4 == 3) k = -k;
        ua %= b;
    }
    return (b == 1) ? k : 0;
}

namespace {

bool is_squarefree(long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

long mod4(long x) { return ((x % 4) + 4) % 4; }

}  // namespace

bool is_fundamental_discriminant(long d) {
    if (d == 0 || d == 1) return false;
    if (mod4(d) == 1) return is_squarefree(d);
    if (d % 4 == 0) {
        long m = d / 4;
        return (mod4(m) == 2 || mod4(m) == 3) && is_squarefree(m);
    }
    return false;
}

CharacterSpec::CharacterSpec(long d) : d_(d), f_(d < 0 ? -d : d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("CharacterSpec: " + std::to_string(d) +
                                    " is not a fundamental discriminant of a nonprincipal character");
}

namespace {

std::mutex g_lchi_mutex;
std::map<std::pair<long, int>, Rational> g_lchi;  // write-once entries

// Generalized Bernoulli number B_{n,chi}, computed by exact truncated series
// division over the rationals.
Rational gen_bernoulli(const CharacterSpec& chi, int n) {
    const long f = chi.modulus();
    const int order = n + 2;

    // numerator: sum_{a=1}^{f} chi(a) e^{at}, coefficients sum_a chi(a) a^j / j!
    // denominator: (e^{ft}-1)/t, coefficients f^{j+1} / (j+1)!
    std::vector<Rational> num(order), den(order);
    for (long a = 1; a <= f; ++a) {
        int ca = chi.chi(static_cast<unsigned long>(a));
        if (ca == 0) continue;
        BigInt apow(1);
        for (int j = 0; j < order; ++j) {
            num[j] += Rational(BigInt(ca) * apow, factorial(j));
            apow *= a;
        }
    }
    BigInt fpow(f);
    for (int j = 0; j < order; ++j) {
        den[j] = Rational(fpow, factorial(j + 1));
        fpow *= f;
    }

    // series quotient; den[0] = f != 0
    std::vector<Rational> quo(order);
    for (int j = 0; j < order; ++j) {
        Rational acc = num[j];
        for (int i = 1; i <= j; ++i) acc -= den[i] * quo[j - i];
        quo[j] = acc / den[0];
    }
    return quo[n] * Rational(factorial(n));
}

}  // namespace

Rational l_chi_neg(const CharacterSpec& chi, int n) {
    if (n < 0) throw std::invalid_argument("l_chi_neg: n must be >= 0");
    const std::pair<long, int> key(chi.discriminant(), n);
    {
        std::lock_guard<std::mutex> lock(g_lchi_mutex);
        auto it = g_lchi.find(key);
        if (it != g_lchi.end()) return it->second;
    }
    Rational value = -gen_bernoulli(chi, n + 1) / Rational(n + 1);
    std::lock_guard<std::mutex> lock(g_lchi_mutex);
    return g_lchi.emplace(key, std::move(value)).first->second;
}

}  // namespace qasym
