#pragma once

#include "qasym/laurent.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qasym {

// First coefficient at which two series differ, with both values.
struct Mismatch {
    int q_exp;
    long z_exp;
    BigInt lhs;
    BigInt rhs;
};

// Truncated power series in q, mod q^N, whose coefficients are Laurent
// polynomials in z. All arithmetic stays below the truncation order.
class LaurentQSeries {
public:
    explicit LaurentQSeries(int order) : c_(check_order(order)) {}

    static LaurentQSeries zero(int order) { return LaurentQSeries(order); }
    static LaurentQSeries one(int order) {
        LaurentQSeries s(order);
        s.c_[0] = LaurentPoly::one();
        return s;
    }
    // c * z^{z_exp} * q^{q_exp}
    static LaurentQSeries monomial(BigInt c, long z_exp, int q_exp, int order) {
        LaurentQSeries s(order);
        if (q_exp < order && q_exp >= 0)
            s.c_[q_exp] = LaurentPoly::monomial(std::move(c), z_exp);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }

    const LaurentPoly& at(int e) const { return c_.at(e); }
    void set(int e, LaurentPoly p) { c_.at(e) = std::move(p); }
    void add_at(int e, const LaurentPoly& p) {
        if (e >= 0 && e < order()) c_[static_cast<size_t>(e)] += p;
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    LaurentQSeries& operator+=(const LaurentQSeries& o) {
        require_same_order(o);
        for (int e = 0; e < order(); ++e) c_[e] += o.c_[e];
        return *this;
    }
    LaurentQSeries& operator-=(const LaurentQSeries& o) {
        require_same_order(o);
        for (int e = 0; e < order(); ++e) c_[e] -= o.c_[e];
        return *this;
    }
    friend LaurentQSeries operator+(LaurentQSeries a, const LaurentQSeries& b) { a += b; return a; }
    friend LaurentQSeries operator-(LaurentQSeries a, const LaurentQSeries& b) { a -= b; return a; }
    LaurentQSeries operator-() const {
        LaurentQSeries r(order());
        for (int e = 0; e < order(); ++e) r.c_[e] = -c_[e];
        return r;
    }

    friend bool operator==(const LaurentQSeries& a, const LaurentQSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentQSeries& a, const LaurentQSeries& b) { return !(a == b); }

    // Multiplication by q^{q_exp} (drops overflowing orders).
    LaurentQSeries shifted(int q_exp) const;
    // Multiplication by a single Laurent polynomial.
    LaurentQSeries scaled(const LaurentPoly& p) const;

    std::optional<Mismatch> first_mismatch(const LaurentQSeries& other) const;

    // One line per q-order: "q^e: <Laurent polynomial>".
    std::string dump() const;

    void require_same_order(const LaurentQSeries& o) const {
        if (o.order() != order())
            throw std::invalid_argument("LaurentQSeries: truncation order mismatch");
    }

private:
    static int check_order(int order) {
        if (order < 1) throw std::invalid_argument("LaurentQSeries: order must be >= 1");
        return order;
    }
    std::vector<LaurentPoly> c_;
};

// Cauchy product mod q^N. Both operands must share the truncation order.
LaurentQSeries qs_mul(const LaurentQSeries& a, const LaurentQSeries& b);

// Exact quotient a/b mod q^N for unit b (the q^0 coefficient of b must be the
// Laurent monomial 1), so qs_mul(result, b) == a.
LaurentQSeries qs_div_unit(const LaurentQSeries& a, const LaurentQSeries& b);

// One factor of a q-Pochhammer product: (sign * z^{z_exp} * q^{q_exp}; q^base).
struct PochFactor {
    int sign = 1;    // +1 or -1
    int z_exp = 0;   // -1, 0 or +1 in this codebase, but any value works
    long q_exp = 0;  // >= 0
};

// (y; q^base)_count = prod_{k < count} (1 - y q^{base k}) mod q^N,
// with y = sign * z^{z_exp} * q^{q_exp}.
LaurentQSeries pochhammer(const PochFactor& y, long base, int count, int N);

// Write-once cache of inverses of pure-q Pochhammer units (z_exp must be 0
// and q_exp >= 1 so the unit has leading coefficient 1). Safe for concurrent
// readers; entries are immutable once inserted.
class UnitInverseCache {
public:
    UnitInverseCache();
    ~UnitInverseCache();
    UnitInverseCache(const UnitInverseCache&) = delete;
    UnitInverseCache& operator=(const UnitInverseCache&) = delete;

    const LaurentQSeries& inverse(const PochFactor& y, long base, int count, int N);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qasym
