#pragma once

#include "qasym/bailey.hpp"
#include "qasym/expansion.hpp"
#include "qasym/identities.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qasym {

using KvList = std::vector<std::pair<std::string, std::string>>;

// Flat, deterministic record of one verification run. All numbers are carried
// as decimal strings so that reruns reproduce reports byte for byte.
struct VerificationReport {
    std::string command;  // "verify" | "expand" | "lvalues"
    std::string target;
    KvList params;
    std::string variant;
    int precision = 0;  // 0 when the run is purely formal/exact
    int order = 0;      // series order N or truncation order M
    std::string grid;   // "hi:lo" or empty
    std::string outcome;  // "PASS" | "FAIL" | "INCONCLUSIVE"
    std::string detail;   // mismatch locator, winner, or note
    std::vector<KvList> rows;

    bool operator==(const VerificationReport&) const = default;
};

std::string emit_json(const VerificationReport& r);
VerificationReport parse_json(const std::string& text);
std::string emit_csv(const VerificationReport& r);
std::string emit_text(const VerificationReport& r);
std::string emit(const VerificationReport& r, const std::string& format);

std::string mismatch_string(const Mismatch& mm);

VerificationReport make_report(const IdentityReport& rep);
VerificationReport make_report(const BaileyCheckReport& rep);
VerificationReport make_report(const SlopeReport& rep, const std::string& grid);
VerificationReport make_report(const ArbitrationReport& rep, const std::string& grid,
                               const Precision& p);

}  // namespace qasym
