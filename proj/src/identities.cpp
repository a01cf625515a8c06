#include "qasym/identities.hpp"

#include <stdexcept>

namespace qasym {

char family_name(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    }
    return '?';
}

Family family_from_name(char c) {
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    }
    throw std::invalid_argument("unknown family (want A, B or C)");
}

namespace {

long tri(long n) { return n * (n + 1) / 2; }

// Largest outer index that can still contribute below q^N given the minimal
// exponent ob*n(n+1)/2 of the outer weight.
int outer_bound(int N, long ob) {
    int n = 0;
    while (ob * tri(n + 1) < N) ++n;
    return n;
}

// The z-carrying seed factor attached to the terminal chain index m.
LaurentQSeries terminal_factor(Family f, int k, int m, int N, UnitInverseCache& cache) {
    switch (f) {
    case Family::A: {
        LaurentQSeries s = qs_mul(pochhammer({1, 1, 0}, 1, m + 1, N),
                                  pochhammer({1, -1, 1}, 1, m, N));
        return qs_mul(s, cache.inverse({1, 0, 1}, 1, 2 * m + 1, N));
    }
    case Family::B: {
        const long Q = 1L << k;
        LaurentQSeries s = qs_mul(pochhammer({1, 1, 0}, Q, m + 1, N),
                                  pochhammer({1, -1, Q}, Q, m, N));
        return qs_mul(s, cache.inverse({1, 0, Q}, Q, 2 * m + 1, N));
    }
    case Family::C: {
        LaurentQSeries s = qs_mul(pochhammer({1, 1, 0}, 1, m + 1, N),
                                  pochhammer({1, -1, 1}, 1, m, N));
        s = qs_mul(s, cache.inverse({1, 0, 1}, 1, m, N));
        return qs_mul(s, cache.inverse({1, 0, 1}, 2, m + 1, N));  // (q;q^2)_{m+1}
    }
    }
    throw std::logic_error("terminal_factor");
}

// Outer Bailey weight at index n. For family B the base exponent ob is a
// variant knob (1 normally, 2 for the b2 candidate).
LaurentQSeries outer_weight(Family f, int n, int N, long ob, UnitInverseCache& cache) {
    const long e = ob * tri(n);
    if (e >= N) return LaurentQSeries::zero(N);
    LaurentQSeries w = pochhammer({1, 0, ob}, ob, n, N).shifted(static_cast<int>(e));
    if (n % 2 == 1) w = -w;
    if (f == Family::C) w = qs_mul(w, cache.inverse({-1, 0, 1}, 1, n, N));
    return w;
}

// Per-level chain transition factor from r_{i-1} = mp down to r_i = m.
LaurentQSeries level_factor(Family f, int k, int level, int mp, int m, int N,
                            UnitInverseCache& cache) {
    (void)k;
    switch (f) {
    case Family::A: {
        const long e = static_cast<long>(m) * m + m;
        if (e >= N) return LaurentQSeries::zero(N);
        return cache.inverse({1, 0, 1}, 1, mp - m, N).shifted(static_cast<int>(e));
    }
    case Family::B: {
        const long bl = 1L << (level - 1);
        const long e = bl * (mp - m);
        if (e >= N) return LaurentQSeries::zero(N);
        LaurentQSeries fct = pochhammer({-1, 0, 2 * bl}, bl, 2 * m, N);
        fct = qs_mul(fct, cache.inverse({1, 0, 2 * bl}, 2 * bl, mp - m, N));
        return fct.shifted(static_cast<int>(e));
    }
    case Family::C: {
        const long e = tri(m);
        if (e >= N) return LaurentQSeries::zero(N);
        return cache.inverse({1, 0, 1}, 1, mp - m, N).shifted(static_cast<int>(e));
    }
    }
    throw std::logic_error("level_factor");
}

LaurentQSeries multisum_lhs_impl(Family f, int k, int N, long outer_base) {
    if (k < 1) throw std::invalid_argument("multisum_lhs: k must be >= 1");
    UnitInverseCache cache;
    const int n_max = outer_bound(N, outer_base);

    // Fold the outer weights through the chain levels:
    //   W_0(n) = outer weight, W_i(m) = sum_{mp >= m} W_{i-1}(mp) f_i(mp, m),
    // then contract against the terminal z-factors.
    std::vector<LaurentQSeries> w(n_max + 1, LaurentQSeries::zero(N));
    for (int n = 0; n <= n_max; ++n) w[n] = outer_weight(f, n, N, outer_base, cache);
    for (int level = 1; level <= k; ++level) {
        std::vector<LaurentQSeries> next(n_max + 1, LaurentQSeries::zero(N));
        for (int mp = 0; mp <= n_max; ++mp) {
            if (w[mp].is_zero()) continue;
            for (int m = 0; m <= mp; ++m) {
                LaurentQSeries fct = level_factor(f, k, level, mp, m, N, cache);
                if (fct.is_zero()) continue;
                next[m] += qs_mul(w[mp], fct);
            }
        }
        w = std::move(next);
    }

    LaurentQSeries acc(N);
    for (int m = 0; m <= n_max; ++m) {
        if (w[m].is_zero()) continue;
        acc += qs_mul(w[m], terminal_factor(f, k, m, N, cache));
    }
    return acc;
}

long theta_min_exponent(Family f, int k, long n) {
    switch (f) {
    case Family::A: return (k + 1) * n * (n + 1);
    case Family::B: return ((1L << k) + 1) * tri(n);
    case Family::C: return (k + 2) * tri(n);
    }
    throw std::logic_error("theta_min_exponent");
}

}  // namespace

LaurentQSeries multisum_lhs(Family f, int k, int N) {
    return multisum_lhs_impl(f, k, N, 1);
}

LaurentQSeries theta_rhs(Family f, int k, int N) {
    if (k < 1) throw std::invalid_argument("theta_rhs: k must be >= 1");
    LaurentQSeries acc(N);
    for (long n = 0;; ++n) {
        const long e = theta_min_exponent(f, k, n);
        if (e >= N) break;
        LaurentPoly p;  // z^{-n} - z^{n+1}
        p.add_term(-n, 1);
        p.add_term(n + 1, -1);
        acc.add_at(static_cast<int>(e), p);
    }
    return acc;
}

const std::vector<std::string>& identity_variants(Family f) {
    static const std::vector<std::string> single{"proof"};
    static const std::vector<std::string> family_b{"b0-printed", "b1-scaled", "b2-base2"};
    return f == Family::B ? family_b : single;
}

IdentityReport verify_identity(Family f, int k, int N, const std::string& variant) {
    const auto& known = identity_variants(f);
    bool ok = false;
    for (const auto& v : known) ok = ok || (v == variant);
    if (!ok)
        throw std::invalid_argument("verify_identity: unknown variant '" + variant +
                                    "' for family " + std::string(1, family_name(f)));

    LaurentQSeries lhs = (variant == "b2-base2") ? multisum_lhs_impl(f, k, N, 2)
                                                 : multisum_lhs(f, k, N);
    LaurentQSeries rhs = theta_rhs(f, k, N);
    if (variant == "b1-scaled") {
        // theta * (1-q) / (1-q^{2^k})
        rhs = qs_mul(rhs, pochhammer({1, 0, 1}, 1, 1, N));
        rhs = qs_div_unit(rhs, pochhammer({1, 0, 1L << k}, 1, 1, N));
    }

    IdentityReport rep;
    rep.family = f;
    rep.k = k;
    rep.order = N;
    rep.variant = variant;
    rep.mismatch = lhs.first_mismatch(rhs);
    rep.pass = !rep.mismatch.has_value();
    return rep;
}

}  // namespace qasym
