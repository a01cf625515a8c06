#pragma once

#include "qasym/qseries.hpp"

#include <string>
#include <vector>

namespace qasym {

// The three chain families:
//   A: outer weight (q)_n (-1)^n q^{n(n+1)/2}, k-fold quadratic-exponent sum,
//      theta side z^{-n} q^{(k+1)n(n+1)} (1 - z^{2n+1})
//   B: doubled-base chain, theta side z^{-n} q^{(2^k+1)n(n+1)/2} (1 - z^{2n+1})
//   C: outer weight carries 1/(-q)_n, theta side z^{-n} q^{(k+2)n(n+1)/2} (1 - z^{2n+1})
enum class Family { A, B, C };

char family_name(Family f);
Family family_from_name(char c);

// Full nested multi-sum side, mod q^N, with the outer Bailey weights applied.
LaurentQSeries multisum_lhs(Family f, int k, int N);

// Partial theta side exactly as displayed for the family.
LaurentQSeries theta_rhs(Family f, int k, int N);

// Registered right-hand-side variants. Families A and C have the single
// "proof" variant; family B has three candidates that differ in bookkeeping
// of the base change:
//   b0-printed  : theta side as printed
//   b1-scaled   : theta side multiplied by (1-q)/(1-q^{2^k})
//   b2-base2    : outer weights taken at base q^2 against the printed theta
const std::vector<std::string>& identity_variants(Family f);

struct IdentityReport {
    Family family;
    int k = 0;
    int order = 0;
    std::string variant;
    bool pass = false;
    std::optional<Mismatch> mismatch;
};

IdentityReport verify_identity(Family f, int k, int N, const std::string& variant);

}  // namespace qasym
