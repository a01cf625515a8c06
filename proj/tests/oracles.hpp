// Test-only oracles, kept independent of the implementation paths they check:
// alternative algorithms for the same quantities, plus literal nested-loop
// evaluation of the multi-sums.
#pragma once

#include "qasym/hreal.hpp"
#include "qasym/identities.hpp"
#include "qasym/rational.hpp"

#include <functional>
#include <vector>

namespace oracle {

using qasym::BigInt;
using qasym::Rational;

// Bernoulli numbers by the Akiyama-Tanigawa triangle (which natively produces
// the B_1 = +1/2 convention; flipped here to match B_1 = -1/2).
inline Rational bernoulli_at(int n) {
    std::vector<Rational> a(static_cast<size_t>(n) + 1);
    Rational result(0);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        result = a[0];
    }
    if (n == 1) return -result;
    return result;
}

// Pascal-triangle binomials, independent of the GMP built-in.
inline std::vector<std::vector<BigInt>> pascal(int rows) {
    std::vector<std::vector<BigInt>> c(rows + 1);
    for (int i = 0; i <= rows; ++i) {
        c[i].assign(static_cast<size_t>(i) + 1, BigInt(1));
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

inline Rational bernoulli_poly_direct(int n, const Rational& x) {
    const auto c = pascal(n);
    Rational acc(0);
    Rational xpow(1);
    // sum_k C(n,k) B_k x^{n-k}, accumulated from k = n downwards
    for (int k = n; k >= 0; --k) {
        acc += Rational(c[n][k]) * bernoulli_at(k) * xpow;
        xpow *= x;
    }
    return acc;
}

// Euler numbers E_0, E_2, E_4, ... from the reciprocal of the cosh series.
inline std::vector<Rational> euler_numbers(int max_half) {
    std::vector<Rational> g(static_cast<size_t>(max_half) + 1);  // E_{2j}/(2j)!
    std::vector<Rational> c(static_cast<size_t>(max_half) + 1);  // 1/(2j)!
    BigInt fact(1);
    for (int j = 0; j <= max_half; ++j) {
        if (j > 0) fact *= BigInt((2 * j - 1)) * BigInt(2 * j);
        c[j] = Rational(BigInt(1), fact);
    }
    g[0] = Rational(1);
    for (int j = 1; j <= max_half; ++j) {
        Rational acc(0);
        for (int i = 1; i <= j; ++i) acc += c[i] * g[j - i];
        g[j] = -acc;
    }
    std::vector<Rational> e(static_cast<size_t>(max_half) + 1);
    BigInt f2(1);
    for (int j = 0; j <= max_half; ++j) {
        if (j > 0) f2 *= BigInt((2 * j - 1)) * BigInt(2 * j);
        e[j] = g[j] * Rational(f2);
    }
    return e;
}

// Exact physicists' Hermite polynomial by the closed-form coefficient sum
// H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
inline Rational hermite_exact(int n, const Rational& x) {
    BigInt nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    const Rational two_x = Rational(2) * x;
    Rational acc(0);
    for (int m = 0; 2 * m <= n; ++m) {
        BigInt mfact(1);
        for (int i = 2; i <= m; ++i) mfact *= i;
        BigInt rfact(1);
        for (int i = 2; i <= n - 2 * m; ++i) rfact *= i;
        Rational term = two_x.pow(n - 2 * m) / Rational(mfact * rfact);
        acc += (m % 2 == 0) ? term : -term;
    }
    return acc * Rational(nfact);
}

// e^x by plain Taylor summation with argument reduction (independent of
// mpfr_exp). digits sets the working precision of the series.
inline qasym::HReal exp_series(const qasym::HReal& x, int digits) {
    const qasym::Precision wp{digits};
    qasym::HReal ax = x.at_precision(wp);
    // halve the argument until |x| < 1, square back afterwards
    int squarings = 0;
    while (ax.abs() > qasym::HReal(1, wp)) {
        ax = ax.ldexp(-1);
        ++squarings;
    }
    qasym::HReal term(1, wp), acc(1, wp);
    const qasym::HReal cutoff = qasym::pow10(-(digits + 5), wp);
    for (long k = 1;; ++k) {
        term = term * ax / qasym::HReal(k, wp);
        acc += term;
        if (term.abs() < cutoff) break;
    }
    for (int i = 0; i < squarings; ++i) acc = acc * acc;
    return acc;
}

// erf(x) by the Maclaurin series (2/sqrt(pi)) sum (-1)^n x^{2n+1}/(n!(2n+1)).
inline qasym::HReal erf_series(const qasym::HReal& x, int digits) {
    const qasym::Precision wp{digits};
    const qasym::HReal ax = x.at_precision(wp);
    const qasym::HReal x2 = ax * ax;
    qasym::HReal pow = ax;  // x^{2n+1}/n!
    qasym::HReal acc(0, wp);
    const qasym::HReal cutoff = qasym::pow10(-(digits + 5), wp);
    for (long n = 0;; ++n) {
        const qasym::HReal term = pow / qasym::HReal(2 * n + 1, wp);
        acc += (n % 2 == 0) ? term : -term;
        if (term.abs() < cutoff && n > 2) break;
        pow = pow * x2 / qasym::HReal(n + 1, wp);
    }
    return acc * qasym::HReal(2, wp) / qasym::hp_pi(wp).sqrt();
}

// Literal nested-loop evaluation of the displayed multi-sum sides, used to
// pin the production evaluation (which folds the sums level by level).
inline qasym::LaurentQSeries naive_multisum(qasym::Family f, int k, int N) {
    using namespace qasym;
    auto tri = [](long n) { return n * (n + 1) / 2; };
    LaurentQSeries total(N);
    for (int n = 0; tri(n) < N; ++n) {
        LaurentQSeries outer =
            pochhammer({1, 0, 1}, 1, n, N).shifted(static_cast<int>(tri(n)));
        if (n % 2 == 1) outer = -outer;
        if (f == Family::C) outer = qs_div_unit(outer, pochhammer({-1, 0, 1}, 1, n, N));

        std::vector<int> r(static_cast<size_t>(k), 0);
        LaurentQSeries inner(N);
        std::function<void(int)> rec = [&](int level) {
            if (level == k) {
                LaurentQSeries term = LaurentQSeries::one(N);
                int prev = n;
                for (int i = 0; i < k; ++i) {
                    const int ri = r[i];
                    if (f == Family::A) {
                        term = term.shifted(ri * ri + ri);
                        term = qs_div_unit(term, pochhammer({1, 0, 1}, 1, prev - ri, N));
                    } else if (f == Family::C) {
                        term = term.shifted(static_cast<int>(tri(ri)));
                        term = qs_div_unit(term, pochhammer({1, 0, 1}, 1, prev - ri, N));
                    } else {
                        const long half = 1L << i;
                        const long full = half * 2;
                        term = qs_mul(term, pochhammer({-1, 0, full}, half, 2 * ri, N));
                        term = term.shifted(static_cast<int>(half * (prev - ri)));
                        term = qs_div_unit(term, pochhammer({1, 0, full}, full, prev - ri, N));
                    }
                    prev = ri;
                }
                const int rk = r[static_cast<size_t>(k) - 1];
                const long base = (f == Family::B) ? (1L << k) : 1;
                LaurentQSeries zf = qs_mul(pochhammer({1, 1, 0}, base, rk + 1, N),
                                           pochhammer({1, -1, base}, base, rk, N));
                if (f == Family::C) {
                    zf = qs_div_unit(zf, pochhammer({1, 0, 1}, 1, rk, N));
                    zf = qs_div_unit(zf, pochhammer({1, 0, 1}, 2, rk + 1, N));
                } else {
                    zf = qs_div_unit(zf, pochhammer({1, 0, base}, base, 2 * rk + 1, N));
                }
                inner += qs_mul(term, zf);
                return;
            }
            const int hi = (level == 0) ? n : r[static_cast<size_t>(level) - 1];
            for (int val = 0; val <= hi; ++val) {
                r[static_cast<size_t>(level)] = val;
                rec(level + 1);
            }
        };
        rec(0);
        total += qs_mul(outer, inner);
    }
    return total;
}

}  // namespace oracle
