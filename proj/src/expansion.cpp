#include "qasym/expansion.hpp"

#include "qasym/cylinder.hpp"
#include "qasym/zeta_values.hpp"

#include <algorithm>

namespace qasym {

std::string target_name(TargetKind kind) {
    switch (kind) {
    case TargetKind::T11: return "t11";
    case TargetKind::T12: return "t12";
    case TargetKind::T13: return "t13";
    case TargetKind::T14: return "t14";
    case TargetKind::F14: return "f14";
    case TargetKind::OL: return "ol";
    }
    return "?";
}

TargetKind target_from_name(const std::string& name) {
    if (name == "t11") return TargetKind::T11;
    if (name == "t12") return TargetKind::T12;
    if (name == "t13") return TargetKind::T13;
    if (name == "t14") return TargetKind::T14;
    if (name == "f14") return TargetKind::F14;
    if (name == "ol") return TargetKind::OL;
    throw std::invalid_argument("unknown target '" + name + "'");
}

const std::vector<std::string>& expansion_variants(TargetKind kind) {
    static const std::vector<std::string> proof_only{"proof"};
    static const std::vector<std::string> proof_statement{"proof", "statement"};
    static const std::vector<std::string> signs{"sign-corrected", "sign-printed"};
    switch (kind) {
    case TargetKind::T12:
    case TargetKind::T13: return proof_statement;
    case TargetKind::F14: return signs;
    default: return proof_only;
    }
}

namespace {

void require_variant(TargetKind kind, const std::string& variant) {
    const auto& vs = expansion_variants(kind);
    if (std::find(vs.begin(), vs.end(), variant) == vs.end())
        throw std::invalid_argument("unknown variant '" + variant + "' for target " +
                                    target_name(kind));
}

// (x)^{n/2} with half-integer powers resolved through sqrt(x).
HReal half_power(const HReal& x, int n) {
    const HReal r = x.pow_si(n / 2);
    return (n % 2 == 0) ? r : r * x.sqrt();
}

// Residue-type expansion shared by T11/T12/T13. The theta difference with
// Gaussian coefficient c2 has the t^{-1} erf term and one D_n-difference sum;
// even powers drop by parity and trivial zeros, so only odd powers remain.
void build_t1x(ExpansionSpec& spec, const Rational& c2, int M, const Precision& wp,
               bool t12_statement, bool t13_statement) {
    const HReal v = spec.target.v.at_precision(wp);
    const HReal w = spec.target.w.at_precision(wp);
    const HReal c2w = HReal::from_rational(c2, wp) * w;
    const HReal x0 = v / (c2w.ldexp(1)).sqrt();  // v / sqrt(2 c2 w)

    // t^{-1} erf residue
    {
        HReal coeff_factor = (hp_pi(wp) / c2w.ldexp(2)).sqrt();      // sqrt(pi/(4 c2 w))
        HReal exp_arg = v * v / c2w.ldexp(2);                        // v^2/(4 c2 w)
        HReal erf_arg = v / c2w.sqrt().ldexp(1);                     // v/(2 sqrt(c2 w))
        if (t12_statement) {
            // printed form keeps the (k+1)-shaped constants of the first
            // theorem with S = 2^k+1 substituted throughout
            const HReal Sw = HReal::from_rational(c2 * Rational(2), wp) * w;  // (2^k+1) w
            coeff_factor = (hp_pi(wp) / Sw.ldexp(2)).sqrt();
            exp_arg = v * v / Sw.ldexp(2);
            erf_arg = v / Sw.sqrt().ldexp(1);
        } else if (t13_statement) {
            const HReal Sw = HReal::from_rational(c2 * Rational(2), wp) * w;  // (k+2) w
            erf_arg = v / Sw.sqrt().ldexp(1);
        }
        const HReal value =
            coeff_factor * hp_exp(exp_arg) * (hp_erf(erf_arg) - hp_erf(-erf_arg));
        spec.terms.push_back({-1, value, TermKind::ErfResidue, std::nullopt});
    }

    HReal dn_pref_arg = v * v / c2w.ldexp(3);  // v^2/(8 c2 w)
    if (t12_statement) {
        const HReal k1w = HReal(spec.target.k + 1, wp) * w;
        dn_pref_arg = v * v / k1w.ldexp(2);    // v^2/(4(k+1)w) as printed
    }
    const HReal pref = hp_exp(dn_pref_arg);
    const HReal base = c2w.ldexp(1);           // 2 c2 w

    for (int n = 1; n <= M; n += 2) {
        const Rational zn = zeta_neg(n);
        const HReal dn_diff = pcf_D(n, -x0) - pcf_D(n, x0);
        HReal coeff = pref * half_power(base, n) * HReal::from_rational(zn, wp) * dn_diff /
                      HReal::from_rational(Rational(factorial(n)), wp);
        if (n % 2 == 1) coeff = -coeff;  // (-t)^n
        spec.terms.push_back({n, coeff, TermKind::ZetaDn, zn});
    }
    spec.next_power = (M % 2 == 0) ? M + 1 : M + 2;
}

}  // namespace

ExpansionSpec build_expansion(const TargetParams& target, int M, const Precision& p,
                              const std::string& variant) {
    require_variant(target.kind, variant);
    if (M < 0 || M > 30) throw std::invalid_argument("build_expansion: need 0 <= M <= 30");
    const Precision wp = p.plus(15);

    ExpansionSpec spec;
    spec.target = target;
    spec.variant = variant;
    spec.order_m = M;
    spec.prec = p;

    switch (target.kind) {
    case TargetKind::T11:
        build_t1x(spec, Rational(target.k + 1), M, wp, false, false);
        break;
    case TargetKind::T12:
        build_t1x(spec, Rational((1L << target.k) + 1, 2), M, wp,
                  variant == "statement", false);
        break;
    case TargetKind::T13:
        build_t1x(spec, Rational(target.k + 2, 2), M, wp, false,
                  variant == "statement");
        break;
    case TargetKind::T14: {
        const CharacterSpec chi(target.d);
        const HReal v = target.v.at_precision(wp), w = target.w.at_precision(wp);
        const HReal x = v / w.ldexp(1).sqrt();      // v / sqrt(2w)
        const HReal pref = hp_exp(v * v / w.ldexp(3));
        const HReal base = w.ldexp(1);              // 2w
        const int start = chi.is_even() ? 1 : 0;    // odd chi keeps even powers
        for (int n = start; n <= M; n += 2) {
            const Rational lv = l_chi_neg(chi, n);
            if (lv.is_zero()) continue;
            HReal coeff = pref * half_power(base, n) * HReal::from_rational(lv, wp) *
                          pcf_D(n, x) / HReal::from_rational(Rational(factorial(n)), wp);
            if (n % 2 == 1) coeff = -coeff;
            spec.terms.push_back({n, coeff, TermKind::LchiDn, lv});
        }
        int np = M + 1;
        while (np % 2 != start % 2 || l_chi_neg(chi, np).is_zero()) ++np;
        spec.next_power = np;
        break;
    }
    case TargetKind::F14: {
        if (target.k < 2) throw std::invalid_argument("build_expansion: F14 needs k >= 2");
        const long km1 = target.k - 1;
        const HReal v = target.v.at_precision(wp), w = target.w.at_precision(wp);
        const HReal km1w = HReal(km1, wp) * w;
        // c = 2(k-1) v / sqrt(2(k-1)w)
        const HReal c = v.ldexp(1) * HReal(km1, wp) / km1w.ldexp(1).sqrt();
        const HReal pref = hp_exp(HReal(km1, wp) * v * v / w.ldexp(1));
        const HReal base = km1w.ldexp(1);  // 2w(k-1)
        const bool corrected = (variant == "sign-corrected");
        for (int n = 0; n <= M; ++n) {
            if (n >= 2 && n % 2 == 0) continue;  // trivial zeros
            Rational ex = (Rational(2).pow(n + 1) - Rational(1)) * zeta_neg(n);
            if (!corrected) ex = -ex;            // as printed: (1 - 2^{1+n}) zeta(-n)
            if (ex.is_zero()) continue;
            HReal coeff = pref * half_power(base, n) * HReal::from_rational(ex, wp) *
                          pcf_D(n, c) / HReal::from_rational(Rational(factorial(n)), wp);
            if (n % 2 == 1) coeff = -coeff;
            spec.terms.push_back({n, coeff, TermKind::FkTerm, ex});
        }
        spec.next_power = (M == 0) ? 1 : ((M % 2 == 0) ? M + 1 : M + 2);
        break;
    }
    case TargetKind::OL: {
        if (target.k < 2) throw std::invalid_argument("build_expansion: OL needs k >= 2");
        const Rational one_minus_k(1 - target.k);
        for (int n = 0; n <= M; ++n) {
            const Rational lv = lm_value(target.l, target.m, n);
            if (lv.is_zero()) continue;
            const Rational ex = lv * one_minus_k.pow(n) / Rational(factorial(n));
            spec.terms.push_back(
                {n, HReal::from_rational(ex, wp), TermKind::OlTerm, lv});
        }
        int np = M + 1;
        while (lm_value(target.l, target.m, np).is_zero()) ++np;
        spec.next_power = np;
        break;
    }
    }
    return spec;
}

HReal eval_truncation(const ExpansionSpec& spec, const HReal& t) {
    const Precision wp = spec.prec.plus(15);
    HReal acc(wp);
    const HReal tt = t.at_precision(wp);
    for (const auto& term : spec.terms) {
        if (term.power == -1)
            acc += term.coeff / tt;
        else
            acc += term.coeff * tt.pow_si(term.power);
    }
    return acc;
}

HReal eval_lhs(const TargetParams& target, const HReal& t, const Precision& p) {
    switch (target.kind) {
    case TargetKind::T11: return eval_theta_diff(Family::A, target.k, t, target.v, target.w, p);
    case TargetKind::T12: return eval_theta_diff(Family::B, target.k, t, target.v, target.w, p);
    case TargetKind::T13: return eval_theta_diff(Family::C, target.k, t, target.v, target.w, p);
    case TargetKind::T14: return eval_theta_chi(CharacterSpec(target.d), t, target.v, target.w, p);
    case TargetKind::F14: return eval_theta_alt(target.k, t, target.v, target.w, p);
    case TargetKind::OL: return eval_theta_ol(target.l, target.m, target.k, t, p);
    }
    throw std::logic_error("eval_lhs");
}

std::vector<HReal> dyadic_grid(int hi, int lo, const Precision& p) {
    if (hi > lo) std::swap(hi, lo);
    std::vector<HReal> grid;
    for (int e = hi; e <= lo; ++e) grid.push_back(HReal::pow2(-e, p));
    return grid;
}

SlopeReport remainder_slope(const TargetParams& target, int M,
                            const std::vector<HReal>& grid, const Precision& p,
                            const std::string& variant) {
    if (grid.size() < 5)
        throw std::invalid_argument("remainder_slope: grid needs at least 5 points");
    const HReal eighth = HReal::pow2(-3, p);
    for (const auto& t : grid)
        if (t > eighth || t.sign() <= 0)
            throw std::invalid_argument("remainder_slope: grid points must lie in (0, 1/8]");

    SlopeReport rep;
    rep.target = target;
    rep.variant = variant;
    rep.order_m = M;
    rep.prec = p;
    rep.slope = HReal(p);

    const ExpansionSpec spec = build_expansion(target, M, p, variant);

    const HReal tiny = pow10(-(p.digits - 10), p);
    bool all_lhs_zero = true;
    for (const auto& t : grid) {
        SlopePoint pt;
        pt.t = t;
        pt.lhs = eval_lhs(target, t, p);
        pt.trunc = eval_truncation(spec, t);
        pt.remainder = (pt.lhs - pt.trunc).abs();
        all_lhs_zero = all_lhs_zero && (pt.lhs.abs() < tiny);
        rep.points.push_back(std::move(pt));
    }
    rep.expected = spec.next_power;

    bool all_coeff_zero = true;
    for (const auto& term : spec.terms)
        all_coeff_zero = all_coeff_zero && (term.coeff.abs() < tiny);
    if (all_lhs_zero && all_coeff_zero) {
        rep.degenerate = true;
        rep.pass = true;
        return rep;
    }

    // noise floor check before fitting
    const HReal floor = pow10(-(p.digits - 13), p);
    for (const auto& pt : rep.points) {
        if (pt.remainder < floor) {
            rep.starved = true;
            rep.pass = false;
            return rep;
        }
    }

    const Precision wp = p.plus(15);
    const auto npts = static_cast<long>(rep.points.size());
    HReal xbar(wp), ybar(wp);
    std::vector<HReal> xs, ys;
    for (const auto& pt : rep.points) {
        xs.push_back(pt.t.at_precision(wp).ln());
        ys.push_back(pt.remainder.at_precision(wp).ln());
        xbar += xs.back();
        ybar += ys.back();
    }
    const HReal n_inv = HReal(1, wp) / HReal(npts, wp);
    xbar *= n_inv;
    ybar *= n_inv;
    HReal sxy(wp), sxx(wp);
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
    }
    rep.slope = (sxy / sxx).at_precision(p);

    const HReal dev = (rep.slope - HReal(rep.expected, p)).abs();
    rep.pass = dev <= HReal::parse("0.25", p);
    return rep;
}

ArbitrationReport arbitrate_variants(const TargetParams& target, int M,
                                     const std::vector<HReal>& grid, const Precision& p,
                                     const std::vector<std::string>& variants) {
    if (variants.size() < 2)
        throw std::invalid_argument("arbitrate: need at least 2 variants");
    ArbitrationReport rep;
    rep.target = target;
    rep.order_m = M;
    rep.margin = HReal(p);
    for (const auto& v : variants) rep.runs.push_back(remainder_slope(target, M, grid, p, v));

    const HReal quarter = HReal::parse("0.25", p);
    const HReal unit = HReal(1, p);
    int winner_idx = -1;
    int n_close = 0;
    for (size_t i = 0; i < rep.runs.size(); ++i) {
        if (rep.runs[i].degenerate || rep.runs[i].starved) continue;
        const HReal dev = (rep.runs[i].slope - HReal(rep.runs[i].expected, p)).abs();
        if (dev <= quarter) {
            ++n_close;
            winner_idx = static_cast<int>(i);
        }
    }
    if (n_close != 1) {
        rep.conclusive = false;
        return rep;
    }
    HReal min_loser_dev(p);
    bool have_loser = false;
    bool all_losers_far = true;
    for (size_t i = 0; i < rep.runs.size(); ++i) {
        if (static_cast<int>(i) == winner_idx) continue;
        const HReal dev = (rep.runs[i].slope - HReal(rep.runs[i].expected, p)).abs();
        if (!have_loser || dev < min_loser_dev) min_loser_dev = dev;
        have_loser = true;
        all_losers_far = all_losers_far && (dev >= unit);
    }
    rep.conclusive = have_loser && all_losers_far;
    if (rep.conclusive) {
        rep.winner = rep.runs[static_cast<size_t>(winner_idx)].variant;
        rep.margin = min_loser_dev;
    }
    return rep;
}

ArbitrationReport arbitrate(const TargetParams& target, int M,
                            const std::vector<HReal>& grid, const Precision& p) {
    return arbitrate_variants(target, M, grid, p, expansion_variants(target.kind));
}

}  // namespace qasym
