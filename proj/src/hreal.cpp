#include "qasym/hreal.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <vector>

namespace qasym {

HReal HReal::parse(std::string_view s, const Precision& p) {
    const auto slash = s.find('/');
    if (slash != std::string_view::npos)
        return from_rational(Rational::parse(s), p);
    HReal r(p);
    std::string buf(s);
    if (buf.empty() || mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("HReal: cannot parse '" + buf + "'");
    return r;
}

HReal HReal::from_rational(const Rational& r, const Precision& p) {
    HReal x(p);
    mpfr_set_q(x.v_, r.raw().get_mpq_t(), MPFR_RNDN);
    return x;
}

HReal HReal::pow2(long e, const Precision& p) {
    HReal r(1, p);
    return r.ldexp(e);
}

HReal HReal::pow_si(long e) const {
    HReal r = dup(prec_bits());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

std::string HReal::str(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) throw std::domain_error("HReal: rendering non-finite value");
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

namespace {

std::mutex g_pi_mutex;
std::map<mpfr_prec_t, HReal> g_pi_cache;

HReal pi_at_bits(mpfr_prec_t bits) {
    std::lock_guard<std::mutex> lock(g_pi_mutex);
    auto it = g_pi_cache.find(bits);
    if (it != g_pi_cache.end()) return it->second;
    HReal r;
    mpfr_set_prec(r.raw(), bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return g_pi_cache.emplace(bits, std::move(r)).first->second;
}

}  // namespace

HReal hp_pi(const Precision& p) { return pi_at_bits(p.bits()); }

HReal hp_pi_like(const HReal& like) { return pi_at_bits(like.prec_bits()); }

HReal hp_exp(const HReal& x) {
    static const double kMaxArg = 1e4;
    if (std::abs(x.to_double()) > kMaxArg)
        throw std::domain_error("hp_exp: |x| exceeds supported range");
    HReal r = x;
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HReal hp_erf(const HReal& x) {
    static const double kMaxArg = 50.0;
    if (std::abs(x.to_double()) > kMaxArg)
        throw std::domain_error("hp_erf: |x| exceeds supported range");
    HReal r = x;
    mpfr_erf(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HReal pow10(long e, const Precision& p) {
    HReal ten(10, p);
    return ten.pow_si(e);
}

}  // namespace qasym
