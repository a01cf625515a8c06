#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qasym {

using BigInt = mpz_class;

// Exact rational number. Always kept in canonical form: gcd(|num|, den) = 1
// and den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    // r^e for e >= 0 (e < 0 allowed when r != 0).
    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0^negative");
            return (Rational(1) / *this).pow(-e);
        }
        mpq_class r(1);
        mpq_class base = v_;
        for (long b = e; b > 0; b >>= 1) {
            if (b & 1) r *= base;
            base *= base;
        }
        return Rational(r);
    }

    // "p/q" with the slash omitted when q = 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(std::string_view s) {
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

}  // namespace qasym
