#pragma once

#include "qasym/character.hpp"
#include "qasym/hreal.hpp"
#include "qasym/theta_eval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qasym {

// Expansion targets:
//   T11/T12/T13 : the three chain-family theorems (parameter k)
//   T14         : character partial theta (parameter d)
//   F14         : single-theta expansion with alternating zeta values (k >= 2)
//   OL          : Hurwitz-difference expansion (parameters l, m, k >= 2)
enum class TargetKind { T11, T12, T13, T14, F14, OL };

std::string target_name(TargetKind kind);
TargetKind target_from_name(const std::string& name);

struct TargetParams {
    TargetKind kind = TargetKind::T11;
    int k = 1;
    long d = 0;
    long l = 0, m = 0;
    HReal v, w;
};

enum class TermKind { ErfResidue, ZetaDn, LchiDn, OlTerm, FkTerm };

struct ExpansionTerm {
    int power;                          // exponent of t, >= -1
    HReal coeff;
    TermKind kind;
    std::optional<Rational> exact_part; // the zeta / L / L_{l,m} factor
};

struct ExpansionSpec {
    TargetParams target;
    std::string variant;
    int order_m = 0;
    Precision prec;
    std::vector<ExpansionTerm> terms;   // strictly increasing powers
    int next_power = 0;                 // smallest power > M with nonzero coefficient
};

// Registered variants per target. Single "proof" entry unless the statement
// and the residue computation disagree (T12, T13) or a sign needs numerical
// arbitration (F14).
const std::vector<std::string>& expansion_variants(TargetKind kind);

ExpansionSpec build_expansion(const TargetParams& target, int M, const Precision& p,
                              const std::string& variant);

// sum of coeff * t^power over all terms.
HReal eval_truncation(const ExpansionSpec& spec, const HReal& t);

// Direct high-precision left-hand side for the target at one grid point.
HReal eval_lhs(const TargetParams& target, const HReal& t, const Precision& p);

struct SlopePoint {
    HReal t, lhs, trunc, remainder;
};

struct SlopeReport {
    TargetParams target;
    std::string variant;
    int order_m = 0;
    Precision prec;
    std::vector<SlopePoint> points;
    HReal slope;
    int expected = 0;
    bool pass = false;
    bool degenerate = false;  // LHS and all coefficients vanish identically
    bool starved = false;     // remainder below the precision noise floor
};

// Least-squares slope of log remainder vs log t after truncating at order M.
// Grid must be decreasing with at least 5 points, all <= 1/8.
SlopeReport remainder_slope(const TargetParams& target, int M,
                            const std::vector<HReal>& grid, const Precision& p,
                            const std::string& variant);

struct ArbitrationReport {
    TargetParams target;
    int order_m = 0;
    std::vector<SlopeReport> runs;
    std::string winner;  // empty when inconclusive
    HReal margin;        // smallest loser deviation from the expected slope
    bool conclusive = false;
};

// Runs the slope test under every registered variant; the winner must match
// the expected slope within 0.25 while every other variant misses by >= 1.
ArbitrationReport arbitrate(const TargetParams& target, int M,
                            const std::vector<HReal>& grid, const Precision& p);
ArbitrationReport arbitrate_variants(const TargetParams& target, int M,
                                     const std::vector<HReal>& grid, const Precision& p,
                                     const std::vector<std::string>& variants);

// {2^{-hi}, ..., 2^{-lo}} (hi <= lo), exact dyadic values.
std::vector<HReal> dyadic_grid(int hi, int lo, const Precision& p);

}  // namespace qasym
