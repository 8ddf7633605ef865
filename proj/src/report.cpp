#include "pmc/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace pmc {

namespace {

using ojson = nlohmann::ordered_json;

void emit(std::string& out, const ojson& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case ojson::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += inner + ojson(it.key()).dump() + ": ";
            emit(out, it.value(), indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case ojson::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first) out += ",\n";
            first = false;
            out += inner;
            emit(out, e, indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case ojson::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
    }
}

std::string dump(const ojson& j) {
    std::string out;
    emit(out, j, 0);
    out += '\n';
    return out;
}

ojson named(const std::vector<std::pair<std::string, double>>& v) {
    ojson o = ojson::object();
    for (const auto& [k, x] : v) o[k] = x;
    return o;
}

std::string format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
    }
    return "?";
}

ojson config_json(const RunConfig& c) {
    ojson j;
    j["command"] = c.command;
    if (c.command != "catalog") {
        j["surface"] = std::string(to_string(c.surface.family));
        j["c"] = c.surface.c;
        j["n"] = c.surface.n;
        j["params"] = ojson::object();
        for (const auto& [k, v] : c.surface.params) j["params"][k] = v;
        j["grid"] = {c.grid.nu, c.grid.nv};
        j["degree"] = c.degree;
        j["tol"] = c.tol;
    }
    if (c.command == "verify") {
        ojson ids = ojson::array();
        for (const IdentitySpec& s : c.identities) ids.push_back(s.label());
        j["identities"] = ids;
    }
    if (c.command == "gate") {
        ojson th = ojson::array();
        for (Theorem t : c.theorems) th.push_back(std::string(cli_name(t)));
        j["theorems"] = th;
    }
    j["format"] = format_name(c.format);
    return j;
}

ojson identity_report_json(const IdentityReport& r) {
    ojson j;
    j["kind"] = r.spec.label();
    j["point"] = {r.point.u, r.point.v};
    j["status"] = std::string(to_string(r.status));
    j["applicable"] = r.applicable;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.status == ReportStatus::Pass || r.status == ReportStatus::Fail) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["terms"] = named(r.terms);
        j["residual"] = r.residual;
        if (!r.checks.empty()) j["checks"] = named(r.checks);
    }
    return j;
}

ojson gate_report_json(const GateReport& g) {
    ojson j;
    j["theorem"] = std::string(cli_name(g.theorem));
    j["status"] = std::string(to_string(g.status));
    if (!g.reason.empty()) j["reason"] = g.reason;
    j["grid"] = {g.grid.nu, g.grid.nv};
    j["hypothesis_margins"] = named(g.hypothesis_margins);
    j["hypothesis_satisfied"] = g.hypothesis_satisfied;
    j["predicted_case"] = g.predicted_case;
    ojson readings = ojson::array();
    for (const GateReading& r : g.readings) {
        ojson o;
        o["reading"] = r.name;
        o["hypothesis_satisfied"] = r.hypothesis_satisfied;
        o["predicted_case"] = r.predicted_case;
        readings.push_back(o);
    }
    j["readings"] = readings;
    j["observed"] = named(g.observed);
    ojson flags = ojson::object();
    for (const auto& [k, v] : g.flags) flags[k] = v;
    j["flags"] = flags;
    j["assumed"] = {{"topology", g.assumptions.topology}, {"complete", g.assumptions.complete}};
    return j;
}

ojson catalog_json() {
    ojson arr = ojson::array();
    for (const CatalogEntry& e : list_catalog()) {
        ojson o;
        o["family"] = std::string(to_string(e.family));
        ojson params = ojson::array();
        for (const ParamSchema& p : e.params) {
            params.push_back({{"key", p.key}, {"default", p.default_value}, {"constraint", p.constraint}});
        }
        o["params"] = params;
        o["c"] = e.curvature_sign;
        o["min_n"] = e.min_n;
        o["pmc"] = e.pmc;
        o["witnesses"] = e.witnesses;
        o["notes"] = e.notes;
        arr.push_back(o);
    }
    return arr;
}

std::string exit_status(int code) {
    switch (code) {
    case kExitOk: return "pass";
    case kExitVerification: return "fail";
    case kExitNumeric: return "error";
    default: return "usage";
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// Rows of (column -> value) written under the union of columns in first-seen order.
std::string csv_table(const std::vector<std::vector<std::pair<std::string, std::string>>>& rows) {
    std::vector<std::string> cols;
    std::map<std::string, std::size_t> seen;
    for (const auto& row : rows)
        for (const auto& [k, v] : row)
            if (seen.emplace(k, cols.size()).second) cols.push_back(k);
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
    os << '\n';
    for (const auto& row : rows) {
        std::vector<std::string> line(cols.size());
        for (const auto& [k, v] : row) line[seen[k]] = v;
        for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_field(line[i]);
        os << '\n';
    }
    return os.str();
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) v = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string canonical_config(const RunConfig& config) {
    std::string s = dump(config_json(config));
    s.pop_back();
    return s;
}

std::string identity_summary_status(const IdentitySummary& s) {
    if (s.errors > 0) return "error";
    if (s.failed > 0) return "fail";
    if (s.evaluated == 0 && s.not_applicable > 0) return "not_applicable: " + s.first_reason;
    return "pass";
}

std::string render_json(const RunOutput& out) {
    const RunConfig& cfg = *out.config;
    ojson root;
    root["config"] = config_json(cfg);
    root["config"]["fingerprint"] = config_fingerprint(cfg);
    ojson summary;
    summary["status"] = exit_status(out.exit_code);
    summary["exit_code"] = out.exit_code;
    ojson reports = ojson::array();
    if (out.suite) {
        ojson ids = ojson::array();
        for (const IdentitySummary& s : out.suite->summary) {
            ojson o;
            o["kind"] = s.spec.label();
            o["status"] = identity_summary_status(s);
            o["max_residual"] = s.max_residual;
            o["evaluated"] = s.evaluated;
            o["not_applicable"] = s.not_applicable;
            o["failed"] = s.failed;
            o["errors"] = s.errors;
            ids.push_back(o);
        }
        summary["identities"] = ids;
        for (const IdentityReport& r : out.suite->reports) reports.push_back(identity_report_json(r));
    }
    if (!out.gates.empty()) {
        ojson gates = ojson::array();
        for (const GateReport& g : out.gates) {
            ojson o;
            o["theorem"] = std::string(cli_name(g.theorem));
            o["status"] = std::string(to_string(g.status));
            o["predicted_case"] = g.predicted_case;
            if (!g.reason.empty()) o["reason"] = g.reason;
            gates.push_back(o);
            reports.push_back(gate_report_json(g));
        }
        summary["gates"] = gates;
    }
    if (out.catalog) {
        summary["families"] = static_cast<int>(list_catalog().size());
        reports = catalog_json();
    }
    root["summary"] = summary;
    root["reports"] = reports;
    return dump(root);
}

std::string render_csv(const RunOutput& out) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    if (out.suite) {
        for (const IdentityReport& r : out.suite->reports) {
            std::vector<std::pair<std::string, std::string>> row{
                {"kind", r.spec.label()},
                {"u", format_double(r.point.u)},
                {"v", format_double(r.point.v)},
                {"status", std::string(to_string(r.status))},
                {"reason", r.reason},
            };
            if (r.status == ReportStatus::Pass || r.status == ReportStatus::Fail) {
                row.emplace_back("lhs", format_double(r.lhs));
                row.emplace_back("rhs", format_double(r.rhs));
                row.emplace_back("residual", format_double(r.residual));
                for (const auto& [k, v] : r.terms) row.emplace_back("term:" + k, format_double(v));
                for (const auto& [k, v] : r.checks) row.emplace_back("check:" + k, format_double(v));
            }
            rows.push_back(std::move(row));
        }
    }
    for (const GateReport& g : out.gates) {
        std::vector<std::pair<std::string, std::string>> row{
            {"theorem", std::string(cli_name(g.theorem))},
            {"status", std::string(to_string(g.status))},
            {"reason", g.reason},
            {"hypothesis_satisfied", g.hypothesis_satisfied ? "true" : "false"},
            {"predicted_case", g.predicted_case},
        };
        for (const auto& [k, v] : g.hypothesis_margins) row.emplace_back("margin:" + k, format_double(v));
        for (const auto& [k, v] : g.observed) row.emplace_back("observed:" + k, format_double(v));
        rows.push_back(std::move(row));
    }
    if (out.catalog) {
        for (const CatalogEntry& e : list_catalog()) {
            std::string params;
            for (const ParamSchema& p : e.params) params += (params.empty() ? "" : ";") + p.key + "=" + format_double(p.default_value);
            rows.push_back({{"family", std::string(to_string(e.family))},
                            {"params", params},
                            {"c", e.curvature_sign},
                            {"min_n", std::to_string(e.min_n)},
                            {"pmc", e.pmc ? "true" : "false"},
                            {"notes", e.notes}});
        }
    }
    return csv_table(rows);
}

std::string render_text(const RunOutput& out) {
    std::ostringstream os;
    const RunConfig& cfg = *out.config;
    os << "pmc-verify " << tool_version() << "  " << cfg.command;
    if (cfg.command != "catalog") {
        os << "  " << to_string(cfg.surface.family) << " c=" << format_double(cfg.surface.c) << " n=" << cfg.surface.n;
        for (const auto& [k, v] : cfg.surface.params) os << ' ' << k << '=' << format_double(v);
        os << "  grid " << cfg.grid.nu << 'x' << cfg.grid.nv;
    }
    os << '\n';
    if (out.suite) {
        for (const IdentitySummary& s : out.suite->summary) {
            os << "  " << s.spec.label();
            for (std::size_t k = s.spec.label().size(); k < 20; ++k) os << ' ';
            os << identity_summary_status(s) << "  max residual " << format_double(s.max_residual) << "  ("
               << s.evaluated << " evaluated, " << s.not_applicable << " n/a";
            if (s.errors) os << ", " << s.errors << " errors";
            os << ")\n";
            if (s.errors && !s.first_reason.empty()) os << "    " << s.first_reason << '\n';
        }
    }
    for (const GateReport& g : out.gates) {
        os << "  " << cli_name(g.theorem) << ": " << to_string(g.status);
        if (!g.reason.empty()) os << " (" << g.reason << ")";
        if (!g.predicted_case.empty()) os << "  -> " << g.predicted_case;
        os << '\n';
        for (const auto& [k, v] : g.hypothesis_margins) os << "    " << k << " = " << format_double(v) << '\n';
    }
    if (out.catalog) {
        for (const CatalogEntry& e : list_catalog()) {
            os << "  " << to_string(e.family) << " [" << e.curvature_sign << ", n>=" << e.min_n
               << (e.pmc ? "" : ", not pmc") << "]";
            for (const ParamSchema& p : e.params) os << ' ' << p.key << '=' << format_double(p.default_value);
            os << "\n    " << e.notes << '\n';
        }
    }
    os << "status: " << exit_status(out.exit_code) << " (exit " << out.exit_code << ")\n";
    return os.str();
}

std::string render(const RunOutput& out) {
    switch (out.config->format) {
    case OutputFormat::Json: return render_json(out);
    case OutputFormat::Csv: return render_csv(out);
    case OutputFormat::Text: return render_text(out);
    }
    return {};
}

} // namespace pmc
