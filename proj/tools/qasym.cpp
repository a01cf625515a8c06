// Command-line front end: formal identity checks, asymptotic slope runs and
// exact L-value tables, with reproducible text/json/csv reports.

#include <CLI11.hpp>

#include "qasym/report.hpp"
#include "qasym/zeta_values.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qasym;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStarved = 3;

int default_precision() {
    if (const char* env = std::getenv("QASYM_PRECISION")) {
        const int p = std::atoi(env);
        if (p >= 10 && p <= 1000) return p;
    }
    return 60;
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f << text;
}

struct VerifyArgs {
    std::string family;
    int k = 1;
    int order = 40;
    std::string variant;
    std::string bailey;
    int n_max = 8;
    bool dump = false;
    std::string out, format = "text";
};

int run_verify(const VerifyArgs& a) {
    if (!a.bailey.empty()) {
        BaileyPair pair = seed_pair(1);
        if (a.bailey == "seed") {
            // as constructed
        } else if (a.bailey == "s1") {
            pair = chain_apply(Chain::S1, pair, a.k);
        } else if (a.bailey == "s2") {
            pair = chain_apply(Chain::S2, pair, a.k);
        } else if (a.bailey == "d1") {
            pair = chain_apply(Chain::D1, seed_pair(1 << a.k), a.k);
        } else {
            std::cerr << "verify: unknown --bailey mode '" << a.bailey << "'\n";
            return kExitUsage;
        }
        const auto rep = bailey_check(pair, a.n_max, a.order);
        write_out(emit(make_report(rep), a.format), a.out);
        return rep.pass ? kExitPass : kExitFail;
    }

    if (a.family.size() != 1) {
        std::cerr << "verify: --family A|B|C is required\n";
        return kExitUsage;
    }
    const Family fam = family_from_name(a.family[0]);

    std::string variant = a.variant;
    if (variant.empty()) variant = (fam == Family::B) ? "all" : "proof";

    if (variant == "all") {
        // run every registered variant; exactly one should survive
        VerificationReport r;
        r.command = "verify";
        r.target = std::string(1, family_name(fam));
        r.params.emplace_back("k", std::to_string(a.k));
        r.variant = "all";
        r.order = a.order;
        std::string winner;
        int n_pass = 0;
        for (const auto& v : identity_variants(fam)) {
            const auto rep = verify_identity(fam, a.k, a.order, v);
            KvList row;
            row.emplace_back("variant", v);
            row.emplace_back("outcome", rep.pass ? "PASS" : "FAIL");
            if (rep.mismatch) row.emplace_back("mismatch", mismatch_string(*rep.mismatch));
            r.rows.push_back(std::move(row));
            if (rep.pass) {
                ++n_pass;
                winner = v;
            }
        }
        const bool ok = (n_pass == 1);
        r.outcome = ok ? "PASS" : (n_pass == 0 ? "FAIL" : "INCONCLUSIVE");
        if (ok) r.detail = "winner=" + winner;
        write_out(emit(r, a.format), a.out);
        return ok ? kExitPass : kExitFail;
    }

    const auto rep = verify_identity(fam, a.k, a.order, variant);
    if (a.dump) {
        std::cout << "lhs:\n" << multisum_lhs(fam, a.k, a.order).dump();
        std::cout << "rhs:\n" << theta_rhs(fam, a.k, a.order).dump();
    }
    write_out(emit(make_report(rep), a.format), a.out);
    return rep.pass ? kExitPass : kExitFail;
}

struct ExpandArgs {
    std::string target;
    int k = 1;
    long d = 0, l = 0, m = 0;
    std::string v = "1", w = "1";
    int terms = 4;
    std::string grid = "4:10";
    int precision = 0;
    std::string variant = "proof";
    std::string out, format = "text";
};

std::pair<int, int> parse_grid(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("grid must look like \"4:10\" (powers of 2)");
    const int hi = std::stoi(s.substr(0, colon));
    const int lo = std::stoi(s.substr(colon + 1));
    if (hi < 3 || lo < hi) throw std::invalid_argument("grid exponents must satisfy 3 <= hi <= lo");
    return {hi, lo};
}

int run_expand(const ExpandArgs& a) {
    const int pdigits = a.precision > 0 ? a.precision : default_precision();
    const Precision prec{pdigits};

    TargetParams target;
    target.kind = target_from_name(a.target);
    target.k = a.k;
    target.d = a.d;
    target.l = a.l;
    target.m = a.m;
    target.v = HReal::parse(a.v, prec);
    target.w = HReal::parse(a.w, prec);
    if (target.kind == TargetKind::F14 || target.kind == TargetKind::OL) {
        if (a.k < 2) {
            std::cerr << "expand: target " << a.target << " needs --k >= 2\n";
            return kExitUsage;
        }
    }

    const auto [hi, lo] = parse_grid(a.grid);
    const auto grid = dyadic_grid(hi, lo, prec);

    if (a.variant == "all") {
        const auto rep = arbitrate(target, a.terms, grid, prec);
        write_out(emit(make_report(rep, a.grid, prec), a.format), a.out);
        return rep.conclusive ? kExitPass : kExitFail;
    }

    const auto rep = remainder_slope(target, a.terms, grid, prec, a.variant);
    write_out(emit(make_report(rep, a.grid), a.format), a.out);
    if (rep.starved) return kExitStarved;
    return rep.pass ? kExitPass : kExitFail;
}

struct LvaluesArgs {
    long d = 0, l = 0, m = 0;
    int max_n = 4;
    std::string out, format = "text";
};

int run_lvalues(const LvaluesArgs& a) {
    VerificationReport r;
    r.command = "lvalues";
    if (a.d != 0) {
        const CharacterSpec chi(a.d);  // throws on invalid d
        r.target = "L(s,chi_d)";
        r.params.emplace_back("d", std::to_string(a.d));
        r.params.emplace_back("max_n", std::to_string(a.max_n));
        for (int n = 0; n <= a.max_n; ++n) {
            KvList row;
            row.emplace_back("s", std::to_string(-n));
            row.emplace_back("value", l_chi_neg(chi, n).str());
            r.rows.push_back(std::move(row));
        }
    } else if (a.l > 0) {
        r.target = "L_{l,m}(-2n)";
        r.params.emplace_back("l", std::to_string(a.l));
        r.params.emplace_back("m", std::to_string(a.m));
        r.params.emplace_back("max_n", std::to_string(a.max_n));
        for (int n = 0; n <= a.max_n; ++n) {
            KvList row;
            row.emplace_back("s", std::to_string(-2 * n));
            row.emplace_back("value", lm_value(a.l, a.m, n).str());
            r.rows.push_back(std::move(row));
        }
    } else {
        std::cerr << "lvalues: pass either --d or --l and --m\n";
        return kExitUsage;
    }
    r.outcome = "PASS";
    write_out(emit(r, a.format), a.out);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series identity and asymptotic-expansion verifier"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a chain identity or a Bailey pair");
    verify->add_option("--family", va.family, "family A, B or C");
    verify->add_option("--k", va.k, "chain depth")->check(CLI::Range(1, 8));
    verify->add_option("--order", va.order, "series truncation order N")->check(CLI::Range(1, 200));
    verify->add_option("--variant", va.variant, "variant id, or 'all'");
    verify->add_option("--bailey", va.bailey, "pair check: seed, s1, s2 or d1");
    verify->add_option("--n-max", va.n_max, "depth for pair checks")->check(CLI::Range(0, 32));
    verify->add_flag("--dump", va.dump, "dump both series");
    verify->add_option("--out", va.out, "write the report to a file");
    verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json", "csv"}));

    ExpandArgs ea;
    auto* expand = app.add_subcommand("expand", "truncated-expansion remainder slope test");
    expand->add_option("--target", ea.target, "t11|t12|t13|t14|f14|ol")->required();
    expand->add_option("--k", ea.k);
    expand->add_option("--d", ea.d, "fundamental discriminant (t14)");
    expand->add_option("--l", ea.l);
    expand->add_option("--m", ea.m);
    expand->add_option("--v", ea.v, "decimal or fraction");
    expand->add_option("--w", ea.w, "decimal or fraction");
    expand->add_option("--terms", ea.terms, "truncation order M")->check(CLI::Range(0, 30));
    expand->add_option("--grid", ea.grid, "dyadic grid \"hi:lo\", t = 2^-hi .. 2^-lo");
    expand->add_option("--precision", ea.precision, "working precision in digits")
        ->check(CLI::Range(0, 1000));
    expand->add_option("--variant", ea.variant, "variant id, or 'all' to arbitrate");
    expand->add_option("--out", ea.out);
    expand->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json", "csv"}));

    LvaluesArgs la;
    auto* lvalues = app.add_subcommand("lvalues", "exact L-value tables");
    lvalues->add_option("--d", la.d, "fundamental discriminant");
    lvalues->add_option("--l", la.l);
    lvalues->add_option("--m", la.m);
    lvalues->add_option("--max-n", la.max_n)->check(CLI::Range(0, 64));
    lvalues->add_option("--out", la.out);
    lvalues->add_option("--format", la.format)->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(va);
        if (expand->parsed()) return run_expand(ea);
        if (lvalues->parsed()) return run_lvalues(la);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
