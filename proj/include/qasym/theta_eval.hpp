#pragma once

#include "qasym/character.hpp"
#include "qasym/hreal.hpp"
#include "qasym/identities.hpp"

#include <string>
#include <vector>

namespace qasym {

// Direct numerical evaluation of the partial theta differences
//   sum_{n>=1} ( e^{n v t - c2 w n^2 t^2} - e^{-n v t - c2 w n^2 t^2} )
// with c2 = k+1 (A), (2^k+1)/2 (B), (k+2)/2 (C). This equals the family's
// multi-sum side minus 1 under the proof substitutions. The tail is cut once
// ten consecutive terms fall below 10^{-(P+10+tail_extra_digits)}.
HReal eval_theta_diff(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                      const Precision& p, int tail_extra_digits = 0);

// Supported z-substitutions for the numeric multi-sum.
const std::vector<std::string>& multisum_variants(Family f);

// Nested multi-sum with q = e^{-w t^2} and z chosen by the variant
// ("proof" or "statement"), minus 1. Cost guard: t >= 1/16 and k <= 2.
HReal eval_multisum(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                    const Precision& p, const std::string& variant = "proof");

// Theta-side value against which eval_multisum should be compared, under a
// registered formal variant of the family's identity ("proof" for A and C;
// "b0-printed" or "b1-scaled" for B).
HReal theta_reference(Family f, int k, const HReal& t, const HReal& v, const HReal& w,
                      const Precision& p, const std::string& variant);

// Character partial theta: sum_{n>=1} chi(n) e^{-w n^2 t^2 - v n t}.
HReal eval_theta_chi(const CharacterSpec& chi, const HReal& t, const HReal& v,
                     const HReal& w, const Precision& p, int tail_extra_digits = 0);

// Alternating partial theta sum_{j>=0} (-1)^j e^{-(k-1)(l j + m)^2 t}, k >= 2.
HReal eval_theta_ol(long l, long m, int k, const HReal& t, const Precision& p,
                    int tail_extra_digits = 0);

// Alternating Gaussian theta sum_{j>=1} (-1)^j e^{-2(k-1) v j t - (k-1) w j^2 t^2},
// k >= 2 (the single-variable theta form behind the OL-style expansions).
HReal eval_theta_alt(int k, const HReal& t, const HReal& v, const HReal& w,
                     const Precision& p, int tail_extra_digits = 0);

}  // namespace qasym
