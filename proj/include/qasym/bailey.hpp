#pragma once

#include "qasym/qseries.hpp"

#include <functional>
#include <memory>
#include <string>

namespace qasym {

// A Bailey pair relative to (q^base, q^base): sequences alpha_n, beta_n of
// truncated q-series with Laurent coefficients in z, satisfying
//   beta_n = sum_{j<=n} alpha_j / ((Q;Q)_{n-j} (Q^2;Q)_{n+j}),  Q = q^base.
// Term access is memoized; pairs are cheap to copy.
class BaileyPair {
public:
    using TermFn = std::function<LaurentQSeries(int n, int N)>;

    BaileyPair(std::string id, int base, TermFn alpha, TermFn beta);

    const std::string& id() const;
    int base() const;
    LaurentQSeries alpha(int n, int N) const;
    LaurentQSeries beta(int n, int N) const;

private:
    struct State;
    std::shared_ptr<State> s_;
};

// The unit Bailey pair with
//   alpha_n = (-1)^n z^{-n} Q^{n(n+1)/2} (1 - z^{2n+1}) / (1-Q)
//   beta_n  = (z;Q)_{n+1} (Q/z;Q)_n / (Q;Q)_{2n+1}
// where Q = q^base.
BaileyPair seed_pair(int base = 1);

enum class Chain { S1, D1, S2 };

// k-fold iterated chain transform. S1 and S2 keep the base; D1 halves it k
// times (the input base must be divisible by 2^k). beta' is the k-level
// nested sum, alpha' the closed form.
BaileyPair chain_apply(Chain chain, const BaileyPair& pair, int k);

struct BaileyCheckReport {
    std::string pair_id;
    int n_max = 0;
    int order = 0;
    bool pass = false;
    int fail_n = -1;                  // first failing n, -1 when pass
    std::optional<Mismatch> mismatch; // coefficient detail when failing
};

// Verifies the defining relation for n <= n_max, mod q^N.
BaileyCheckReport bailey_check(const BaileyPair& pair, int n_max, int N);

}  // namespace qasym
