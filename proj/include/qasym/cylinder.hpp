#pragma once

#include "qasym/hreal.hpp"

namespace qasym {

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{n+1} = 2x H_n - 2n H_{n-1}. n <= 200.
HReal hermite(int n, const HReal& x);

// Parabolic cylinder function at integer order:
//   D_n(x) = 2^{-n/2} e^{-x^2/4} H_n(x/sqrt 2).
HReal pcf_D(int n, const HReal& x);

// Order -1 via the error function:
//   D_{-1}(x) = sqrt(pi/2) e^{x^2/4} (1 - erf(x/sqrt 2)).  |x| <= 50.
HReal pcf_Dm1(const HReal& x);

}  // namespace qasym
