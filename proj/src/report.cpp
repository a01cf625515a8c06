#include "qasym/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qasym {

namespace {

nlohmann::ordered_json kv_to_json(const KvList& kv) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : kv) obj[key] = value;
    return obj;
}

KvList kv_from_json(const nlohmann::ordered_json& obj) {
    KvList kv;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        kv.emplace_back(it.key(), it.value().get<std::string>());
    return kv;
}

std::string kv_lookup(const KvList& kv, const std::string& key) {
    for (const auto& [k, v] : kv)
        if (k == key) return v;
    return "";
}

std::string params_cell(const KvList& params) {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string emit_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["target"] = r.target;
    j["params"] = kv_to_json(r.params);
    j["variant"] = r.variant;
    j["precision"] = r.precision;
    j["order"] = r.order;
    j["grid"] = r.grid;
    j["outcome"] = r.outcome;
    j["detail"] = r.detail;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) rows.push_back(kv_to_json(row));
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

VerificationReport parse_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.params = kv_from_json(j.at("params"));
    r.variant = j.at("variant").get<std::string>();
    r.precision = j.at("precision").get<int>();
    r.order = j.at("order").get<int>();
    r.grid = j.at("grid").get<std::string>();
    r.outcome = j.at("outcome").get<std::string>();
    r.detail = j.at("detail").get<std::string>();
    for (const auto& row : j.at("rows")) r.rows.push_back(kv_from_json(row));
    return r;
}

std::string emit_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "target,params,t,lhs,truncation,remainder,slope,expected,pass\n";
    const std::string params = params_cell(r.params);
    const std::string pass = (r.outcome == "PASS") ? "true" : "false";
    auto line = [&](const KvList& row) {
        out << csv_quote(r.target) << ',' << csv_quote(params) << ','
            << csv_quote(kv_lookup(row, "t")) << ',' << csv_quote(kv_lookup(row, "lhs"))
            << ',' << csv_quote(kv_lookup(row, "truncation")) << ','
            << csv_quote(kv_lookup(row, "remainder")) << ','
            << csv_quote(kv_lookup(row, "slope")) << ','
            << csv_quote(kv_lookup(row, "expected")) << ',' << pass << "\n";
    };
    if (r.rows.empty()) {
        line(KvList{});
    } else {
        for (const auto& row : r.rows) line(row);
    }
    return out.str();
}

std::string emit_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.command << " " << r.target;
    if (!r.params.empty()) out << " [" << params_cell(r.params) << "]";
    if (!r.variant.empty()) out << " variant=" << r.variant;
    if (r.order != 0) out << " order=" << r.order;
    if (r.precision != 0) out << " precision=" << r.precision;
    if (!r.grid.empty()) out << " grid=" << r.grid;
    out << "\noutcome: " << r.outcome << "\n";
    if (!r.detail.empty()) out << r.detail << "\n";
    for (const auto& row : r.rows) {
        out << "  ";
        bool first = true;
        for (const auto& [k, v] : row) {
            if (!first) out << "  ";
            out << k << "=" << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string emit(const VerificationReport& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "csv") return emit_csv(r);
    if (format == "text") return emit_text(r);
    throw std::invalid_argument("unknown report format '" + format + "'");
}

std::string mismatch_string(const Mismatch& mm) {
    return "first mismatch at q^" + std::to_string(mm.q_exp) + " z^" +
           std::to_string(mm.z_exp) + ": lhs=" + mm.lhs.get_str() +
           " rhs=" + mm.rhs.get_str();
}

VerificationReport make_report(const IdentityReport& rep) {
    VerificationReport r;
    r.command = "verify";
    r.target = std::string(1, family_name(rep.family));
    r.params.emplace_back("k", std::to_string(rep.k));
    r.variant = rep.variant;
    r.order = rep.order;
    r.outcome = rep.pass ? "PASS" : "FAIL";
    if (rep.mismatch) r.detail = mismatch_string(*rep.mismatch);
    return r;
}

VerificationReport make_report(const BaileyCheckReport& rep) {
    VerificationReport r;
    r.command = "verify";
    r.target = rep.pair_id;
    r.params.emplace_back("n_max", std::to_string(rep.n_max));
    r.order = rep.order;
    r.outcome = rep.pass ? "PASS" : "FAIL";
    if (!rep.pass) {
        r.detail = "first failing n=" + std::to_string(rep.fail_n);
        if (rep.mismatch) r.detail += "; " + mismatch_string(*rep.mismatch);
    }
    return r;
}

namespace {

KvList target_params(const TargetParams& t, int digits) {
    KvList kv;
    switch (t.kind) {
    case TargetKind::T11:
    case TargetKind::T12:
    case TargetKind::T13:
        kv.emplace_back("k", std::to_string(t.k));
        break;
    case TargetKind::T14:
        kv.emplace_back("d", std::to_string(t.d));
        break;
    case TargetKind::F14:
        kv.emplace_back("k", std::to_string(t.k));
        break;
    case TargetKind::OL:
        kv.emplace_back("l", std::to_string(t.l));
        kv.emplace_back("m", std::to_string(t.m));
        kv.emplace_back("k", std::to_string(t.k));
        break;
    }
    if (t.kind != TargetKind::OL) {
        kv.emplace_back("v", t.v.str(digits));
        kv.emplace_back("w", t.w.str(digits));
    }
    return kv;
}

}  // namespace

VerificationReport make_report(const SlopeReport& rep, const std::string& grid) {
    VerificationReport r;
    r.command = "expand";
    r.target = target_name(rep.target.kind);
    const int digits = rep.prec.digits;
    r.params = target_params(rep.target, 12);
    r.variant = rep.variant;
    r.precision = rep.prec.digits;
    r.order = rep.order_m;
    r.grid = grid;
    if (rep.degenerate) {
        r.outcome = "PASS";
        r.detail = "degenerate: left side and all coefficients vanish";
    } else if (rep.starved) {
        r.outcome = "FAIL";
        r.detail = "precision starvation: remainder below the noise floor at precision " +
                   std::to_string(rep.prec.digits);
    } else {
        r.outcome = rep.pass ? "PASS" : "FAIL";
        r.detail = "slope=" + rep.slope.str(8) + " expected=" + std::to_string(rep.expected);
    }
    for (const auto& pt : rep.points) {
        KvList row;
        row.emplace_back("t", pt.t.str(8));
        row.emplace_back("lhs", pt.lhs.str(digits));
        row.emplace_back("truncation", pt.trunc.str(digits));
        row.emplace_back("remainder", pt.remainder.str(digits));
        if (!rep.degenerate && !rep.starved) {
            row.emplace_back("slope", rep.slope.str(8));
            row.emplace_back("expected", std::to_string(rep.expected));
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

VerificationReport make_report(const ArbitrationReport& rep, const std::string& grid,
                               const Precision& p) {
    VerificationReport r;
    r.command = "expand";
    r.target = target_name(rep.target.kind);
    r.params = target_params(rep.target, 12);
    r.variant = "all";
    r.precision = p.digits;
    r.order = rep.order_m;
    r.grid = grid;
    r.outcome = rep.conclusive ? "PASS" : "INCONCLUSIVE";
    if (rep.conclusive)
        r.detail = "winner=" + rep.winner + " margin=" + rep.margin.str(8);
    for (const auto& run : rep.runs) {
        KvList row;
        row.emplace_back("variant", run.variant);
        if (run.degenerate) {
            row.emplace_back("note", "degenerate");
        } else if (run.starved) {
            row.emplace_back("note", "starved");
        } else {
            row.emplace_back("slope", run.slope.str(8));
            row.emplace_back("expected", std::to_string(run.expected));
            row.emplace_back("pass", run.pass ? "true" : "false");
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

}  // namespace qasym
