#include "qasym/cylinder.hpp"

#include <cmath>

namespace qasym {

HReal hermite(int n, const HReal& x) {
    if (n < 0 || n > 200) throw std::invalid_argument("hermite: order out of range");
    HReal prev = x.with_value(1);  // H_0
    if (n == 0) return prev;
    const HReal two_x = x.ldexp(1);
    HReal cur = two_x;  // H_1
    for (int m = 1; m < n; ++m) {
        HReal next = two_x * cur - x.with_value(2L * m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

HReal pcf_D(int n, const HReal& x) {
    if (n < 0 || n > 200) throw std::invalid_argument("pcf_D: order out of range");
    const HReal sqrt2 = x.with_value(2).sqrt();
    const HReal h = hermite(n, x / sqrt2);
    HReal r = hp_exp(-(x * x).ldexp(-2)) * h;
    if (n % 2 == 0) return r.ldexp(-n / 2);
    return r.ldexp(-(n + 1) / 2) * sqrt2;  // 2^{-(n+1)/2} * sqrt2 = 2^{-n/2}
}

HReal pcf_Dm1(const HReal& x) {
    static const double kMaxArg = 50.0;
    if (std::abs(x.to_double()) > kMaxArg)
        throw std::domain_error("pcf_Dm1: |x| exceeds supported range");
    const HReal sqrt2 = x.with_value(2).sqrt();
    const HReal root_half_pi = hp_pi_like(x).ldexp(-1).sqrt();  // sqrt(pi/2)
    return root_half_pi * hp_exp((x * x).ldexp(-2)) *
           (x.with_value(1) - hp_erf(x / sqrt2));
}

}  // namespace qasym
