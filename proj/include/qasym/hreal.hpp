#pragma once

#include <mpfr.h>

#include "qasym/rational.hpp"

#include <string>
#include <string_view>

namespace qasym {

// Ambient working precision, in decimal digits. Ten guard digits are added
// when converting to mantissa bits.
struct Precision {
    int digits = 50;

    static constexpr int kGuardDigits = 10;

    mpfr_prec_t bits() const {
        if (digits < 1) throw std::invalid_argument("Precision: digits must be >= 1");
        const double log2_10 = 3.321928094887362;
        auto b = static_cast<mpfr_prec_t>((digits + kGuardDigits) * log2_10) + 1;
        return b < 64 ? 64 : b;
    }

    Precision plus(int extra) const { return Precision{digits + extra}; }
};

// Arbitrary-precision real. Binary operations carry the larger operand
// precision; rounding is to nearest. Equality is exact; use close_to for
// tolerance comparisons.
class HReal {
public:
    HReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit HReal(const Precision& p) { mpfr_init2(v_, p.bits()); mpfr_set_zero(v_, 1); }
    HReal(long value, const Precision& p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    HReal(const HReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    HReal(HReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    HReal& operator=(const HReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HReal& operator=(HReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HReal() { mpfr_clear(v_); }

    // Parses either a decimal string or a fraction "a/b".
    static HReal parse(std::string_view s, const Precision& p);
    static HReal from_rational(const Rational& r, const Precision& p);
    // 2^e at the given precision (exact).
    static HReal pow2(long e, const Precision& p);

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

    // An integer constant carried at this value's precision.
    HReal with_value(long v) const {
        HReal r = dup(prec_bits());
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }

    // The same value re-rounded to another working precision.
    HReal at_precision(const Precision& p) const {
        HReal r = dup(p.bits());
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    HReal operator-() const { HReal r = dup(prec_bits()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    HReal abs() const { HReal r = dup(prec_bits()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

    friend HReal operator+(const HReal& a, const HReal& b) { return binop(a, b, mpfr_add); }
    friend HReal operator-(const HReal& a, const HReal& b) { return binop(a, b, mpfr_sub); }
    friend HReal operator*(const HReal& a, const HReal& b) { return binop(a, b, mpfr_mul); }
    friend HReal operator/(const HReal& a, const HReal& b) {
        if (mpfr_zero_p(b.v_)) throw std::domain_error("HReal: division by zero");
        return binop(a, b, mpfr_div);
    }
    HReal& operator+=(const HReal& o) { *this = *this + o; return *this; }
    HReal& operator-=(const HReal& o) { *this = *this - o; return *this; }
    HReal& operator*=(const HReal& o) { *this = *this * o; return *this; }
    HReal& operator/=(const HReal& o) { *this = *this / o; return *this; }

    HReal sqrt() const {
        if (sign() < 0) throw std::domain_error("HReal: sqrt of negative");
        HReal r = dup(prec_bits());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    HReal ln() const {
        if (sign() <= 0) throw std::domain_error("HReal: log of nonpositive");
        HReal r = dup(prec_bits());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // x * 2^e (exact)
    HReal ldexp(long e) const {
        HReal r = dup(prec_bits());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    HReal pow_si(long e) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    friend bool operator==(const HReal& a, const HReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const HReal& a, const HReal& b) { return !(a == b); }
    friend bool operator<(const HReal& a, const HReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const HReal& a, const HReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const HReal& a, const HReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const HReal& a, const HReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    bool close_to(const HReal& other, const HReal& tol) const {
        return (*this - other).abs() <= tol;
    }

    // Scientific decimal rendering with the requested number of significant
    // digits; deterministic for identical values.
    std::string str(int digits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    HReal dup(mpfr_prec_t bits) const {
        HReal r;
        mpfr_set_prec(r.v_, bits);
        return r;
    }
    using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static HReal binop(const HReal& a, const HReal& b, Fn fn) {
        HReal r = a.dup(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// pi at the given precision; cached per mantissa width.
HReal hp_pi(const Precision& p);
// pi at the mantissa width of an existing value.
HReal hp_pi_like(const HReal& like);

// e^x; rejects |x| > 1e4.
HReal hp_exp(const HReal& x);

// erf(x); rejects |x| > 50.
HReal hp_erf(const HReal& x);

// 10^e at the given precision, e may be negative.
HReal pow10(long e, const Precision& p);

}  // namespace qasym
