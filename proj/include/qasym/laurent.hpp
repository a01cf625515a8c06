#pragma once

#include "qasym/rational.hpp"

#include <map>
#include <string>

namespace qasym {

// Laurent polynomial in z over the big integers. No zero coefficients are
// stored; the exponent range is whatever the stored terms span.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(BigInt coeff, long z_exp) {
        LaurentPoly p;
        if (coeff != 0) p.c_.emplace(z_exp, std::move(coeff));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
    }

    const std::map<long, BigInt>& terms() const { return c_; }

    BigInt coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    void add_term(long e, const BigInt& v) {
        if (v == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Ascending z-exponent, e.g. "z^-1 - 2 + z^2".
    std::string str() const;

private:
    std::map<long, BigInt> c_;
};

}  // namespace qasym
