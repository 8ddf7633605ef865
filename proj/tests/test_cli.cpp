#include "pmc/cli.hpp"
#include "pmc/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace pmc;
using nlohmann::json;

namespace {

struct Proc {
    int code;
    std::string out;
};

// Runs the installed binary through the shell; stderr is discarded.
Proc run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + PMC_VERIFY_EXE + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Proc run_inproc(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

void expect_usage(const std::vector<std::string>& args, const std::string& fragment) {
    try {
        (void)parse_args(args);
        ADD_FAILURE() << "no usage error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UsageError);
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

} // namespace

TEST(Cli, ParseDefaults) {
    const RunConfig c = parse_args({"verify", "--surface", "clifford_torus", "--c", "1", "--r", "0.6"});
    EXPECT_EQ(c.command, "verify");
    EXPECT_EQ(c.surface.family, Family::CliffordTorus);
    EXPECT_EQ(c.surface.c, 1.0);
    EXPECT_EQ(c.surface.params.at("r"), 0.6);
    EXPECT_EQ(c.grid.nu, 8);
    EXPECT_EQ(c.grid.nv, 8);
    EXPECT_EQ(c.degree, 4);
    EXPECT_EQ(c.tol, 1e-7);
    EXPECT_EQ(c.identities.size(), all_identities().size());
    EXPECT_EQ(c.format, OutputFormat::Json);
}

TEST(Cli, ParseLists) {
    const RunConfig c = parse_args({"verify", "--surface", "slice", "--identities", "gauss,codazzi:E4", "--grid", "3x5"});
    ASSERT_EQ(c.identities.size(), 2u);
    EXPECT_EQ(c.identities[1].label(), "Codazzi(E4)");
    EXPECT_EQ(c.grid.nu, 3);
    EXPECT_EQ(c.grid.nv, 5);
    const RunConfig g = parse_args({"gate", "--surface", "horosphere", "--c", "-1", "--theorems", "gap-cneg"});
    ASSERT_EQ(g.theorems.size(), 1u);
    EXPECT_EQ(g.theorems[0], Theorem::GapCneg);
}

TEST(Cli, UsageErrors) {
    expect_usage({"verify", "--surface", "nosuch"}, "clifford_torus");
    expect_usage({"verify", "--surface", "clifford_torus", "--c", "1", "--r", "1.0"}, "r out of domain");
    expect_usage({"verify", "--surface", "slice", "--degree", "9"}, "--degree");
    expect_usage({"verify", "--surface", "slice", "--tol", "0"}, "--tol");
    expect_usage({"verify", "--surface", "slice", "--identities", "bogus"}, "bogus");
    expect_usage({"verify", "--surface", "slice", "--format", "xml"}, "--format");
    expect_usage({"verify", "--surface", "slice", "--grid", "0"}, "--grid");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify --surface clifford_torus --c 1 --r 0.6").code, kExitOk);
    EXPECT_EQ(run("verify --surface nosuch").code, kExitUsage);
    EXPECT_EQ(run("bogus").code, kExitUsage);
    EXPECT_EQ(run("gate --surface perturbed_graph --eps 0.1 --theorems gap-main").code, kExitVerification);
    EXPECT_EQ(run("gate --surface horosphere --c -1 --theorems gap-cneg").code, kExitOk);
    EXPECT_EQ(run("catalog").code, kExitOk);
}

TEST(Cli, VerifyJson) {
    const Proc p = run("verify --surface clifford_torus --c 1 --r 0.6 --identities all");
    ASSERT_EQ(p.code, 0);
    const json j = json::parse(p.out);
    EXPECT_EQ(j["summary"]["status"], "pass");
    for (const json& s : j["summary"]["identities"]) EXPECT_LE(s["max_residual"].get<double>(), 1e-7);
    EXPECT_EQ(j["config"]["fingerprint"].get<std::string>().rfind("pmc-verify/", 0), 0u);
}

TEST(Cli, NotApplicableIsNotFailure) {
    const Proc p = run("verify --surface slice --c 1 --identities simons-phi-h");
    EXPECT_EQ(p.code, 0);
    const json j = json::parse(p.out);
    EXPECT_EQ(j["summary"]["identities"][0]["status"], "not_applicable: minimal");
}

TEST(Cli, GateReason) {
    const Proc p = run("gate --surface perturbed_graph --eps 0.1 --theorems gap-main");
    const json j = json::parse(p.out);
    EXPECT_EQ(j["summary"]["gates"][0]["reason"], "pmc residual exceeded");
}

TEST(Cli, Deterministic) {
    const std::string args = "verify --surface round_sphere --c -1 --rho 0.9 --grid 5";
    const Proc a = run(args, "PMC_VERIFY_THREADS=1");
    const Proc b = run(args, "PMC_VERIFY_THREADS=7");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, run_inproc({"verify", "--surface", "round_sphere", "--c", "-1", "--rho", "0.9", "--grid", "5"}).out);
}

TEST(Cli, BadThreadEnvironment) {
    EXPECT_EQ(run("verify --surface slice", "PMC_VERIFY_THREADS=zero").code, kExitUsage);
}

TEST(Cli, CsvAndText) {
    const Proc csv = run("verify --surface clifford_torus --c 1 --grid 2 --identities gauss --format csv");
    ASSERT_EQ(csv.code, 0);
    std::istringstream lines(csv.out);
    std::string header, row;
    std::getline(lines, header);
    EXPECT_NE(header.find("residual"), std::string::npos);
    int rows = 0;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    EXPECT_EQ(rows, 4);

    const Proc text = run("gate --surface clifford_torus --c 1 --format text");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("gap-main: pass"), std::string::npos);
}

TEST(Cli, FormatDouble) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "null");
}

TEST(Cli, FingerprintIgnoresOutputAndThreads) {
    RunConfig a = parse_args({"verify", "--surface", "slice"});
    RunConfig b = a;
    b.output = "x.json";
    b.threads = 3;
    EXPECT_EQ(config_fingerprint(a), config_fingerprint(b));
    b.tol = 1e-6;
    EXPECT_NE(config_fingerprint(a), config_fingerprint(b));
}
