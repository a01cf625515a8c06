#include "qasym/bailey.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qasym {

struct BaileyPair::State {
    std::string id;
    int base;
    TermFn alpha_fn, beta_fn;
    std::mutex mutex;
    std::map<std::pair<int, int>, LaurentQSeries> alpha_memo, beta_memo;

    LaurentQSeries term(bool is_alpha, int n, int N) {
        const std::pair<int, int> key(n, N);
        auto& memo = is_alpha ? alpha_memo : beta_memo;
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        LaurentQSeries value = (is_alpha ? alpha_fn : beta_fn)(n, N);
        std::lock_guard<std::mutex> lock(mutex);
        return memo.emplace(key, std::move(value)).first->second;
    }
};

BaileyPair::BaileyPair(std::string id, int base, TermFn alpha, TermFn beta)
    : s_(std::make_shared<State>()) {
    if (base < 1) throw std::invalid_argument("BaileyPair: base must be >= 1");
    s_->id = std::move(id);
    s_->base = base;
    s_->alpha_fn = std::move(alpha);
    s_->beta_fn = std::move(beta);
}

const std::string& BaileyPair::id() const { return s_->id; }
int BaileyPair::base() const { return s_->base; }
LaurentQSeries BaileyPair::alpha(int n, int N) const { return s_->term(true, n, N); }
LaurentQSeries BaileyPair::beta(int n, int N) const { return s_->term(false, n, N); }

namespace {

long tri(long n) { return n * (n + 1) / 2; }

}  // namespace

BaileyPair seed_pair(int base) {
    const long b = base;
    auto alpha = [b](int n, int N) {
        const long shift = b * tri(n);
        LaurentQSeries num(N);
        if (shift < N) {
            LaurentPoly p;  // (-1)^n (z^{-n} - z^{n+1})
            const BigInt sign = (n % 2 == 0) ? 1 : -1;
            p.add_term(-n, sign);
            p.add_term(n + 1, -sign);
            num.add_at(static_cast<int>(shift), p);
        }
        LaurentQSeries den = pochhammer({1, 0, b}, b, 1, N);  // 1 - q^b
        return qs_div_unit(num, den);
    };
    auto beta = [b](int n, int N) {
        LaurentQSeries num = qs_mul(pochhammer({1, 1, 0}, b, n + 1, N),   // (z;Q)_{n+1}
                                    pochhammer({1, -1, b}, b, n, N));     // (Q/z;Q)_n
        LaurentQSeries den = pochhammer({1, 0, b}, b, 2 * n + 1, N);      // (Q;Q)_{2n+1}
        return qs_div_unit(num, den);
    };
    return BaileyPair("seed(base=" + std::to_string(base) + ")", base, alpha, beta);
}

namespace {

// Sum over chains n >= r_1 >= ... >= r_k = m of the per-level transition
// factors; returns the weight attached to each terminal index m.
// factor(level, m_prev, m) must be a series of order N.
std::vector<LaurentQSeries> chain_weights(
    int n, int k, int N,
    const std::function<LaurentQSeries(int, int, int)>& factor) {
    std::vector<LaurentQSeries> cur(n + 1, LaurentQSeries::zero(N));
    cur[n] = LaurentQSeries::one(N);
    for (int level = 1; level <= k; ++level) {
        std::vector<LaurentQSeries> next(n + 1, LaurentQSeries::zero(N));
        for (int mp = 0; mp <= n; ++mp) {
            if (cur[mp].is_zero()) continue;
            for (int m = 0; m <= mp; ++m) {
                LaurentQSeries f = factor(level, mp, m);
                if (f.is_zero()) continue;
                next[m] += qs_mul(cur[mp], f);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

BaileyPair chain_apply(Chain chain, const BaileyPair& pair, int k) {
    if (k < 0) throw std::invalid_argument("chain_apply: k must be >= 0");
    if (k == 0) return pair;  // identity by convention
    const long b = pair.base();
    auto cache = std::make_shared<UnitInverseCache>();

    switch (chain) {
    case Chain::S1: {
        auto alpha = [pair, b, k](int n, int N) {
            const long shift = b * static_cast<long>(k) * n * (n + 1);
            if (shift >= N) return LaurentQSeries::zero(N);
            return pair.alpha(n, N).shifted(static_cast<int>(shift));
        };
        auto beta = [pair, b, k, cache](int n, int N) {
            auto factor = [&](int, int mp, int m) {
                const long e = b * (static_cast<long>(m) * m + m);
                if (e >= N) return LaurentQSeries::zero(N);
                return cache->inverse({1, 0, b}, b, mp - m, N).shifted(static_cast<int>(e));
            };
            auto w = chain_weights(n, k, N, factor);
            LaurentQSeries acc(N);
            for (int m = 0; m <= n; ++m)
                if (!w[m].is_zero()) acc += qs_mul(w[m], pair.beta(m, N));
            return acc;
        };
        return BaileyPair(pair.id() + "|S1^" + std::to_string(k), pair.base(), alpha, beta);
    }
    case Chain::S2: {
        auto alpha = [pair, b, k](int n, int N) {
            const long shift = b * static_cast<long>(k) * tri(n);
            if (shift >= N) return LaurentQSeries::zero(N);
            return pair.alpha(n, N).shifted(static_cast<int>(shift));
        };
        auto beta = [pair, b, k, cache](int n, int N) {
            auto factor = [&](int, int mp, int m) {
                const long e = b * tri(m);
                if (e >= N) return LaurentQSeries::zero(N);
                return cache->inverse({1, 0, b}, b, mp - m, N).shifted(static_cast<int>(e));
            };
            auto w = chain_weights(n, k, N, factor);
            LaurentQSeries acc(N);
            for (int m = 0; m <= n; ++m) {
                if (w[m].is_zero()) continue;
                // (-Q;Q)_m beta_m inside the sum, 1/(-Q;Q)_n outside
                LaurentQSeries inner = qs_mul(pochhammer({-1, 0, b}, b, m, N), pair.beta(m, N));
                acc += qs_mul(w[m], inner);
            }
            return qs_mul(acc, cache->inverse({-1, 0, b}, b, n, N));
        };
        return BaileyPair(pair.id() + "|S2^" + std::to_string(k), pair.base(), alpha, beta);
    }
    case Chain::D1: {
        if (b % (1L << k) != 0)
            throw std::invalid_argument("chain_apply: D1 needs base divisible by 2^k");
        const long nb = b >> k;  // base after k halvings
        auto alpha = [pair](int n, int N) { return pair.alpha(n, N); };
        auto beta = [pair, nb, k, cache](int n, int N) {
            auto factor = [&](int level, int mp, int m) {
                const long bl = nb << (level - 1);  // 2^{level-1} * nb
                const long e = bl * (mp - m);
                if (e >= N) return LaurentQSeries::zero(N);
                LaurentQSeries f = pochhammer({-1, 0, 2 * bl}, bl, 2 * m, N);  // (-q^{2bl}; q^{bl})_{2m}
                f = qs_mul(f, cache->inverse({1, 0, 2 * bl}, 2 * bl, mp - m, N));
                return f.shifted(static_cast<int>(e));
            };
            auto w = chain_weights(n, k, N, factor);
            LaurentQSeries acc(N);
            for (int m = 0; m <= n; ++m)
                if (!w[m].is_zero()) acc += qs_mul(w[m], pair.beta(m, N));
            return acc;
        };
        return BaileyPair(pair.id() + "|D1^" + std::to_string(k), static_cast<int>(nb),
                          alpha, beta);
    }
    }
    throw std::logic_error("chain_apply: unknown chain");
}

BaileyCheckReport bailey_check(const BaileyPair& pair, int n_max, int N) {
    const long b = pair.base();
    UnitInverseCache cache;
    BaileyCheckReport report;
    report.pair_id = pair.id();
    report.n_max = n_max;
    report.order = N;
    for (int n = 0; n <= n_max; ++n) {
        LaurentQSeries rhs(N);
        for (int j = 0; j <= n; ++j) {
            LaurentQSeries term = qs_mul(pair.alpha(j, N), cache.inverse({1, 0, b}, b, n - j, N));
            term = qs_mul(term, cache.inverse({1, 0, 2 * b}, b, n + j, N));
            rhs += term;
        }
        if (auto mm = pair.beta(n, N).first_mismatch(rhs)) {
            report.pass = false;
            report.fail_n = n;
            report.mismatch = mm;
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace qasym
