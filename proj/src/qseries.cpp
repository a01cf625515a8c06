#include "qasym/qseries.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qasym {

LaurentQSeries LaurentQSeries::shifted(int q_exp) const {
    LaurentQSeries r(order());
    for (int e = 0; e + q_exp < order(); ++e)
        if (e + q_exp >= 0) r.c_[e + q_exp] = c_[e];
    return r;
}

LaurentQSeries LaurentQSeries::scaled(const LaurentPoly& p) const {
    LaurentQSeries r(order());
    for (int e = 0; e < order(); ++e)
        if (!c_[e].is_zero()) r.c_[e] = c_[e] * p;
    return r;
}

std::optional<Mismatch> LaurentQSeries::first_mismatch(const LaurentQSeries& other) const {
    require_same_order(other);
    for (int e = 0; e < order(); ++e) {
        if (c_[e] == other.c_[e]) continue;
        LaurentPoly diff = c_[e] - other.c_[e];
        long ze = diff.terms().begin()->first;
        return Mismatch{e, ze, c_[e].coeff(ze), other.c_[e].coeff(ze)};
    }
    return std::nullopt;
}

std::string LaurentQSeries::dump() const {
    std::string out;
    for (int e = 0; e < order(); ++e) {
        if (c_[e].is_zero()) continue;
        out += "q^" + std::to_string(e) + ": " + c_[e].str() + "\n";
    }
    if (out.empty()) out = "0\n";
    return out;
}

LaurentQSeries qs_mul(const LaurentQSeries& a, const LaurentQSeries& b) {
    a.require_same_order(b);
    const int N = a.order();
    LaurentQSeries r(N);
    for (int i = 0; i < N; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j < N; ++j) {
            if (b.at(j).is_zero()) continue;
            r.add_at(i + j, a.at(i) * b.at(j));
        }
    }
    return r;
}

LaurentQSeries qs_div_unit(const LaurentQSeries& a, const LaurentQSeries& b) {
    a.require_same_order(b);
    const int N = a.order();
    if (!b.at(0).is_one())
        throw std::domain_error("qs_div_unit: divisor q^0 coefficient is not 1");
    // b = 1 + higher orders, so c[m] = a[m] - sum_{j=1..m} b[j] c[m-j] exactly.
    LaurentQSeries c(N);
    for (int m = 0; m < N; ++m) {
        LaurentPoly acc = a.at(m);
        for (int j = 1; j <= m; ++j) {
            if (b.at(j).is_zero() || c.at(m - j).is_zero()) continue;
            acc -= b.at(j) * c.at(m - j);
        }
        c.set(m, std::move(acc));
    }
    return c;
}

LaurentQSeries pochhammer(const PochFactor& y, long base, int count, int N) {
    if (base < 1) throw std::invalid_argument("pochhammer: base must be >= 1");
    if (count < 0) throw std::invalid_argument("pochhammer: count must be >= 0");
    LaurentQSeries r = LaurentQSeries::one(N);
    for (int k = 0; k < count; ++k) {
        const long e = y.q_exp + base * k;
        if (e >= N) break;  // remaining factors are 1 mod q^N
        LaurentQSeries f = LaurentQSeries::one(N);
        f.add_at(static_cast<int>(e), LaurentPoly::monomial(-y.sign, y.z_exp));
        r = qs_mul(r, f);
    }
    return r;
}

struct UnitInverseCache::Impl {
    using Key = std::tuple<int, long, long, int, int>;
    std::mutex mutex;
    std::map<Key, LaurentQSeries> map;
};

UnitInverseCache::UnitInverseCache() : impl_(std::make_unique<Impl>()) {}
UnitInverseCache::~UnitInverseCache() = default;

const LaurentQSeries& UnitInverseCache::inverse(const PochFactor& y, long base, int count,
                                                int N) {
    if (y.z_exp != 0 || y.q_exp < 1)
        throw std::invalid_argument("UnitInverseCache: factor is not a pure-q unit");
    const Impl::Key key{y.sign, y.q_exp, base, count, N};
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->map.find(key);
    if (it != impl_->map.end()) return it->second;
    LaurentQSeries inv = qs_div_unit(LaurentQSeries::one(N), pochhammer(y, base, count, N));
    return impl_->map.emplace(key, std::move(inv)).first->second;
}

}  // namespace qasym
