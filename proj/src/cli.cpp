#include "pmc/cli.hpp"

#include "pmc/parallel.hpp"
#include "pmc/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef PMC_VERSION
#define PMC_VERSION "0.0.0"
#endif

namespace pmc {

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::UsageError, what); }

struct RawOptions {
    std::string surface;
    double c = 1.0;
    int n = 3;
    std::optional<double> r, rho, eps;
    std::string grid = "8";
    int degree = Jet::kDefaultDegree;
    double tol = 1e-7;
    std::string identities = "all";
    std::string theorems = "all";
    std::string format = "json";
    std::string output;
};

void add_surface_options(CLI::App* sub, RawOptions& o) {
    sub->add_option("--surface", o.surface, "catalog family")->required();
    sub->add_option("--c", o.c, "curvature of the space form M^n(c)");
    sub->add_option("--n", o.n, "dimension of the space form");
    sub->add_option("--r", o.r, "torus radius");
    sub->add_option("--rho", o.rho, "geodesic radius");
    sub->add_option("--eps", o.eps, "perturbation amplitude");
    sub->add_option("--grid", o.grid, "sample grid, N or NxM");
    sub->add_option("--degree", o.degree, "immersion jet degree");
    sub->add_option("--tol", o.tol, "residual and predicate tolerance");
}

void add_output_options(CLI::App* sub, RawOptions& o) {
    sub->add_option("--format", o.format, "json, csv or text");
    sub->add_option("--output", o.output, "write the report to a file instead of stdout");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(' '));
        cur.erase(cur.find_last_not_of(' ') + 1);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

int parse_count(const std::string& s, const std::string& flag) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || v < 1 || v > 1000) usage(flag + ": expected an integer in [1, 1000], got '" + s + "'");
    return static_cast<int>(v);
}

GridSpec parse_grid(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) {
        const int k = parse_count(s, "--grid");
        return {k, k};
    }
    return {parse_count(s.substr(0, x), "--grid"), parse_count(s.substr(x + 1), "--grid")};
}

std::string known_identities() {
    std::string s = "all";
    for (const IdentitySpec& spec : all_identities()) {
        const std::string name(cli_name(spec.kind));
        if (s.find(name) == std::string::npos) s += ", " + name;
    }
    return s;
}

std::vector<IdentitySpec> parse_identities(const std::string& list) {
    std::vector<IdentitySpec> out;
    const std::vector<IdentitySpec> all = all_identities();
    for (const std::string& item : split(list, ',')) {
        if (item == "all") {
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        const auto colon = item.find(':');
        const std::string name = item.substr(0, colon);
        const auto kind = identity_from_cli_name(name);
        if (!kind) usage("--identities: unknown identity '" + name + "' (valid: " + known_identities() + ")");
        if (colon != std::string::npos) {
            if (!takes_normal_field(*kind)) usage("--identities: '" + name + "' takes no normal field");
            const std::string field = item.substr(colon + 1);
            NormalField f;
            if (field == "H") f = NormalField::H;
            else if (field == "E3") f = NormalField::E3;
            else if (field == "E4") f = NormalField::E4;
            else usage("--identities: unknown normal field '" + field + "' (valid: H, E3, E4)");
            out.push_back({*kind, f});
            continue;
        }
        bool any = false;
        for (const IdentitySpec& s : all) {
            if (s.kind == *kind) {
                out.push_back(s);
                any = true;
            }
        }
        if (!any) out.push_back({*kind});
    }
    if (out.empty()) usage("--identities: empty list");
    return out;
}

std::vector<Theorem> parse_theorems(const std::string& list) {
    std::vector<Theorem> out;
    for (const std::string& item : split(list, ',')) {
        if (item == "all") {
            for (Theorem t : all_theorems()) out.push_back(t);
            continue;
        }
        const auto t = theorem_from_cli_name(item);
        if (!t) usage("--theorems: unknown theorem '" + item + "' (valid: all, sphere2, gap-cneg, gap-cpos, gap-main)");
        out.push_back(*t);
    }
    if (out.empty()) usage("--theorems: empty list");
    return out;
}

std::string family_list() {
    std::string s;
    for (const CatalogEntry& e : list_catalog()) s += (s.empty() ? "" : ", ") + std::string(to_string(e.family));
    return s;
}

void check_threads_env() {
    const char* env = std::getenv(kThreadsEnvVar);
    if (!env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        usage(std::string(kThreadsEnvVar) + ": expected an integer >= 1, got '" + env + "'");
    }
}

} // namespace

std::string tool_version() { return PMC_VERSION; }

std::string config_fingerprint(const RunConfig& config) {
    // FNV-1a over the canonical config.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canonical_config(config)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return "pmc-verify/" + tool_version() + "/" + buf;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Verification of identities and theorems for pmc surfaces in M^n(c) x R", "pmc-verify"};
    app.require_subcommand(1, 1);
    RawOptions o;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite on a catalog surface");
    add_surface_options(verify, o);
    verify->add_option("--identities", o.identities, "comma-separated identities, name[:H|E3|E4], or all");
    add_output_options(verify, o);
    CLI::App* gate = app.add_subcommand("gate", "evaluate theorem hypotheses and conclusions");
    add_surface_options(gate, o);
    gate->add_option("--theorems", o.theorems, "comma-separated theorems or all");
    add_output_options(gate, o);
    CLI::App* catalog = app.add_subcommand("catalog", "list the catalog surfaces");
    add_output_options(catalog, o);

    RunConfig cfg;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        cfg.help = sub->help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        usage(e.what());
    }
    cfg.command = app.get_subcommands().front()->get_name();
    check_threads_env();

    if (o.format == "json") cfg.format = OutputFormat::Json;
    else if (o.format == "csv") cfg.format = OutputFormat::Csv;
    else if (o.format == "text") cfg.format = OutputFormat::Text;
    else usage("--format: expected json, csv or text, got '" + o.format + "'");
    cfg.output = o.output;
    if (cfg.command == "catalog") return cfg;

    const auto family = family_from_string(o.surface);
    if (!family) usage("--surface: unknown family '" + o.surface + "' (valid: " + family_list() + ")");
    cfg.surface.family = *family;
    if (!std::isfinite(o.c)) usage("--c: must be finite");
    cfg.surface.c = o.c;
    if (o.n < 2 || o.n > 16) usage("--n: expected 2 <= n <= 16");
    cfg.surface.n = o.n;
    if (o.r) cfg.surface.params["r"] = *o.r;
    if (o.rho) cfg.surface.params["rho"] = *o.rho;
    if (o.eps) cfg.surface.params["eps"] = *o.eps;
    cfg.grid = parse_grid(o.grid);
    if (o.degree < 2 || o.degree > Jet::kMaxDegree) {
        usage("--degree: expected 2 <= degree <= " + std::to_string(Jet::kMaxDegree));
    }
    cfg.degree = o.degree;
    if (!(o.tol > 0.0) || !std::isfinite(o.tol)) usage("--tol: must be positive");
    cfg.tol = o.tol;
    if (cfg.command == "verify") cfg.identities = parse_identities(o.identities);
    else cfg.theorems = parse_theorems(o.theorems);

    try {
        (void)make_surface(cfg.surface);
    } catch (const Error& e) {
        usage("--surface " + o.surface + ": " + e.what());
    }
    return cfg;
}

RunResult execute(const RunConfig& config) {
    RunOutput out;
    out.config = &config;
    if (config.command == "catalog") {
        out.catalog = true;
        return {kExitOk, render(out)};
    }
    const CatalogSurface surface = make_surface(config.surface);
    if (config.command == "verify") {
        IdentityOptions opts;
        opts.tol = config.tol;
        out.suite = run_suite(surface.immersion, config.grid, config.identities, opts, config.degree, config.threads);
        if (out.suite->has_errors()) out.exit_code = kExitNumeric;
        else if (!out.suite->pass()) out.exit_code = kExitVerification;
    } else if (config.command == "gate") {
        GateOptions opts;
        opts.tol = config.tol;
        opts.degree = config.degree;
        opts.threads = config.threads;
        const GateAssumptions assumed{surface.topology, surface.complete};
        bool failed = false, errored = false;
        for (Theorem t : config.theorems) {
            out.gates.push_back(check_gate(t, surface.immersion, config.grid, assumed, opts));
            failed |= out.gates.back().status == GateStatus::Fail;
            errored |= out.gates.back().status == GateStatus::Error;
        }
        out.exit_code = errored ? kExitNumeric : failed ? kExitVerification : kExitOk;
    } else {
        usage("unknown command '" + config.command + "'");
    }
    return {out.exit_code, render(out)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const Error& e) {
        err << "pmc-verify: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!cfg.help.empty()) {
        out << cfg.help;
        return kExitOk;
    }
    RunResult result;
    try {
        result = execute(cfg);
    } catch (const Error& e) {
        err << "pmc-verify: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::UsageError || e.kind() == ErrorKind::BadParameters ? kExitUsage : kExitNumeric;
    }
    if (cfg.output.empty()) {
        out << result.report;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            err << "pmc-verify: --output: cannot open '" << cfg.output << "'\n";
            return kExitUsage;
        }
        f << result.report;
    }
    return result.exit_code;
}

} // namespace pmc
