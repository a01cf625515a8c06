#include "qasym/theta_eval.hpp"

#include <cmath>

namespace qasym {

namespace {

void require_positive(const HReal& t, const HReal& w) {
    if (t.sign() <= 0) throw std::invalid_argument("theta eval: t must be > 0");
    if (w.sign() <= 0) throw std::invalid_argument("theta eval: w must be > 0");
}

// c2 in the Gaussian exponent per family.
Rational family_c2(Family f, int k) {
    switch (f) {
    case Family::A: return Rational(k + 1);
    case Family::B: return Rational((1L << k) + 1, 2);
    case Family::C: return Rational(k + 2, 2);
    }
    throw std::logic_error("family_c2");
}

}  // namespace

HReal eval_theta_diff(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                      const Precision& p, int tail_extra_digits) {
    require_positive(t, w);
    if (k < 1) throw std::invalid_argument("eval_theta_diff: k must be >= 1");
    const Precision wp = p.plus(15);
    const HReal tt = t.at_precision(wp), vv = v.at_precision(wp), ww = w.at_precision(wp);
    const HReal thr = pow10(-(p.digits + 10 + tail_extra_digits), wp);

    const HReal c2w = HReal::from_rational(family_c2(f, k), wp) * ww;
    const HReal vt = vv * tt;
    const HReal gt2 = c2w * tt * tt;

    HReal acc(wp);
    int small_run = 0;
    for (long n = 1;; ++n) {
        const HReal nn = acc.with_value(n);
        const HReal gauss = -gt2 * nn * nn;
        const HReal term = hp_exp(nn * vt + gauss) - hp_exp(-(nn * vt) + gauss);
        acc += term;
        small_run = (term.abs() < thr) ? small_run + 1 : 0;
        if (small_run >= 10) break;
    }
    return acc.at_precision(p);
}

const std::vector<std::string>& multisum_variants(Family f) {
    static const std::vector<std::string> a{"proof"};
    static const std::vector<std::string> bc{"proof", "statement"};
    return f == Family::A ? a : bc;
}

namespace {

// z exponent offset: z = e^{-v t - zc * w t^2} with zc depending on family
// and on whether the statement's or the proof's substitution is requested.
Rational z_coefficient(Family f, int k, const std::string& variant) {
    const bool statement = (variant == "statement");
    if (!statement && variant != "proof")
        throw std::invalid_argument("eval_multisum: unknown variant '" + variant + "'");
    switch (f) {
    case Family::A:
        return Rational(k + 1);
    case Family::B:
        return statement ? Rational((1L << k) + 1) : Rational((1L << k) + 1, 2);
    case Family::C:
        return statement ? Rational(k + 1, 2) : Rational(k + 2, 2);
    }
    throw std::logic_error("z_coefficient");
}

}  // namespace

HReal eval_multisum(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                    const Precision& p, const std::string& variant) {
    require_positive(t, w);
    if (k < 1 || k > 2)
        throw std::domain_error("eval_multisum: cost guard requires 1 <= k <= 2");
    const double td = t.to_double();
    if (td < 1.0 / 16.0)
        throw std::domain_error("eval_multisum: cost guard requires t >= 1/16");
    const Rational zc = z_coefficient(f, k, variant);

    // The nested sum cancels down from terms of size ~ 1/(q;q)_inf^{k+1};
    // widen the working precision accordingly.
    const double wt2 = w.to_double() * td * td;
    const int cancel_digits =
        static_cast<int>((k + 1) * (9.8696044 / (6.0 * wt2 * 2.302585)) + 1.0);
    const Precision wp = p.plus(25 + cancel_digits);

    const HReal tt = t.at_precision(wp), vv = v.at_precision(wp), ww = w.at_precision(wp);
    const HReal wt2h = ww * tt * tt;
    const HReal q = hp_exp(-wt2h);
    const HReal z = hp_exp(-(vv * tt) - HReal::from_rational(zc, wp) * wt2h);
    const HReal one = q.with_value(1);

    // outer cutoff: q^{n(n+1)/2} < 10^{-(P+10)}
    const double need = (p.digits + 10) * 2.302585 / wt2;
    long n_max = 1;
    while (static_cast<double>(n_max) * (n_max + 1) / 2.0 < need) ++n_max;
    n_max += 2;

    const long jmax = 2 * n_max + 2;
    auto poch_table = [&](const HReal& x0, const HReal& ratio, long len) {
        // products prod_{i<j} (1 - x0 * ratio^i)
        std::vector<HReal> tbl(static_cast<size_t>(len) + 1, one);
        HReal x = x0;
        for (long j = 1; j <= len; ++j) {
            tbl[j] = tbl[j - 1] * (one - x);
            x = x * ratio;
        }
        return tbl;
    };

    const std::vector<HReal> pq = poch_table(q, q, jmax);  // (q;q)_j

    // Q_0(m) = outer weight; fold through the k levels; contract with the
    // terminal z-factor.
    std::vector<HReal> cur(static_cast<size_t>(n_max) + 1, HReal(wp));
    for (long n = 0; n <= n_max; ++n) {
        HReal wgt = pq[n] * q.pow_si(n * (n + 1) / 2);
        cur[n] = (n % 2 == 1) ? -wgt : wgt;
    }
    if (f == Family::C) {
        const std::vector<HReal> npq = poch_table(-q, q, n_max);  // (-q;q)_j
        for (long n = 0; n <= n_max; ++n) cur[n] = cur[n] / npq[n];
    }

    for (int level = 1; level <= k; ++level) {
        std::vector<HReal> next(static_cast<size_t>(n_max) + 1, HReal(wp));
        if (f == Family::B) {
            const long bl = 1L << (level - 1);
            const HReal qbl = q.pow_si(bl);
            const HReal q2bl = qbl * qbl;
            const std::vector<HReal> den = poch_table(q2bl, q2bl, n_max);  // (q^{2bl};q^{2bl})_j
            // neg[m] = (-q^{2bl}; q^{bl})_{2m}
            std::vector<HReal> neg(static_cast<size_t>(n_max) + 1, one);
            std::vector<HReal> qblpow(static_cast<size_t>(n_max) + 1, one);
            {
                HReal x = q2bl;
                for (long m = 1; m <= n_max; ++m) {
                    const HReal f1 = one + x;
                    x = x * qbl;
                    const HReal f2 = one + x;
                    x = x * qbl;
                    neg[m] = neg[m - 1] * f1 * f2;
                    qblpow[m] = qblpow[m - 1] * qbl;
                }
            }
            for (long mp = 0; mp <= n_max; ++mp) {
                if (cur[mp].is_zero()) continue;
                for (long m = 0; m <= mp; ++m)
                    next[m] += cur[mp] * neg[m] * qblpow[mp - m] / den[mp - m];
            }
        } else {
            std::vector<HReal> qe(static_cast<size_t>(n_max) + 1, one);
            for (long m = 0; m <= n_max; ++m)
                qe[m] = q.pow_si(f == Family::A ? m * m + m : m * (m + 1) / 2);
            for (long mp = 0; mp <= n_max; ++mp) {
                if (cur[mp].is_zero()) continue;
                for (long m = 0; m <= mp; ++m)
                    next[m] += cur[mp] * qe[m] / pq[mp - m];
            }
        }
        cur = std::move(next);
    }

    // terminal z-factors
    const long base = (f == Family::B) ? (1L << k) : 1;
    const HReal qb = (base == 1) ? q : q.pow_si(base);
    const std::vector<HReal> pqb = (base == 1) ? pq : poch_table(qb, qb, jmax);
    const std::vector<HReal> zp1 = poch_table(z, qb, n_max + 1);   // (z;Q)_j
    const std::vector<HReal> zp2 = poch_table(qb / z, qb, n_max);  // (Q/z;Q)_j
    std::vector<HReal> qodd;                                       // (q;q^2)_j for C
    if (f == Family::C) qodd = poch_table(q, q * q, n_max + 1);

    HReal acc(wp);
    for (long m = 0; m <= n_max; ++m) {
        if (cur[m].is_zero()) continue;
        const HReal znum = zp1[m + 1] * zp2[m];
        const HReal s = (f == Family::C) ? znum / (pq[m] * qodd[m + 1])
                                         : znum / pqb[2 * m + 1];
        acc += cur[m] * s;
    }
    return (acc - one).at_precision(p);
}

HReal theta_reference(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                      const Precision& p, const std::string& variant) {
    const Precision wp = p.plus(15);
    const HReal theta = eval_theta_diff(f, k, t, v, w, wp);
    if (f != Family::B || variant == "b0-printed" || variant == "proof")
        return theta.at_precision(p);
    if (variant == "b1-scaled") {
        const HReal tt = t.at_precision(wp), ww = w.at_precision(wp);
        const HReal q = hp_exp(-(ww * tt * tt));
        const HReal one = q.with_value(1);
        const HReal scale = (one - q) / (one - q.pow_si(1L << k));
        return (scale * (one + theta.at_precision(wp)) - one).at_precision(p);
    }
    throw std::invalid_argument("theta_reference: no numeric reference for variant '" +
                                variant + "'");
}

HReal eval_theta_chi(const CharacterSpec& chi, const HReal& t, const HReal& v,
                     const HReal& w, const Precision& p, int tail_extra_digits) {
    require_positive(t, w);
    const Precision wp = p.plus(15);
    const HReal tt = t.at_precision(wp), vv = v.at_precision(wp), ww = w.at_precision(wp);
    const HReal thr = pow10(-(p.digits + 10 + tail_extra_digits), wp);
    const HReal vt = vv * tt;
    const HReal abs_vt = vt.abs();
    const HReal wt2 = ww * tt * tt;

    HReal acc(wp);
    HReal prev_env(wp);
    for (long n = 1;; ++n) {
        const HReal nn = acc.with_value(n);
        const HReal gauss = wt2 * nn * nn;
        const HReal env = hp_exp(abs_vt * nn - gauss);
        const int c = chi.chi(static_cast<unsigned long>(n));
        if (c != 0) {
            HReal term = hp_exp(-(vt * nn) - gauss);
            acc += (c > 0) ? term : -term;
        }
        if (n > 1 && env < thr && env <= prev_env) break;
        prev_env = env;
    }
    return acc.at_precision(p);
}

HReal eval_theta_ol(long l, long m, int k, const HReal& t, const Precision& p,
                    int tail_extra_digits) {
    if (k < 2) throw std::invalid_argument("eval_theta_ol: k must be >= 2");
    if (l <= 0 || m <= 0 || m >= l) throw std::invalid_argument("eval_theta_ol: need 0 < m < l");
    if (t.sign() <= 0) throw std::invalid_argument("eval_theta_ol: t must be > 0");
    const Precision wp = p.plus(15);
    const HReal tt = t.at_precision(wp);
    const HReal thr = pow10(-(p.digits + 10 + tail_extra_digits), wp);
    const HReal km1 = tt.with_value(k - 1);

    HReal acc(wp);
    for (long j = 0;; ++j) {
        const HReal a = tt.with_value(l * j + m);
        const HReal term = hp_exp(-km1 * a * a * tt);
        acc += (j % 2 == 0) ? term : -term;
        if (term < thr) break;  // strictly decreasing envelope
    }
    return acc.at_precision(p);
}

HReal eval_theta_alt(int k, const HReal& t, const HReal& v, const HReal& w,
                     const Precision& p, int tail_extra_digits) {
    if (k < 2) throw std::invalid_argument("eval_theta_alt: k must be >= 2");
    require_positive(t, w);
    const Precision wp = p.plus(15);
    const HReal tt = t.at_precision(wp), vv = v.at_precision(wp), ww = w.at_precision(wp);
    const HReal thr = pow10(-(p.digits + 10 + tail_extra_digits), wp);
    const HReal lin = vv * tt * tt.with_value(2 * (k - 1));  // 2(k-1) v t
    const HReal gau = ww * tt * tt * tt.with_value(k - 1);   // (k-1) w t^2

    HReal acc(wp);
    int small_run = 0;
    for (long j = 1;; ++j) {
        const HReal jj = acc.with_value(j);
        const HReal term = hp_exp(-(lin * jj) - gau * jj * jj);
        acc += (j % 2 == 0) ? term : -term;
        small_run = (term.abs() < thr) ? small_run + 1 : 0;
        if (small_run >= 10) break;
    }
    return acc.at_precision(p);
}

}  // namespace qasym
