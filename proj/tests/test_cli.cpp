#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include <intersect/cli.hpp>

using namespace intersect;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "intersect");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    const CliRun r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, CountLinesOnTheSextic) {
    const auto j = run_json({"count", "lines", "--ambient", "5", "--degree", "6", "--incidence", "2"});
    EXPECT_EQ(j["value"]["num"], "60480");
    EXPECT_EQ(j["value"]["den"], "1");
    EXPECT_EQ(j["space"], "gr(2,6)");
    for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, CountConicsOnTheSextic) {
    const auto j = run_json({"count", "conics", "--ambient", "5", "--degree", "6", "--incidence", "2"});
    EXPECT_EQ(j["value"]["num"], "440884080");
    EXPECT_FALSE(j["notes"].empty());
}

TEST(Cli, JsonSchema) {
    const auto j = run_json({"integrate", "--space", "gr(2,4)", "--expr", "s[1]^4", "--backend", "both"});
    for (const char* key : {"command", "space", "expr", "backend", "value", "checks"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["command"].is_string());
    EXPECT_TRUE(j["value"]["num"].is_string());
    EXPECT_TRUE(j["value"]["den"].is_string());
    ASSERT_EQ(j["checks"].size(), 1u);
    for (const char* key : {"name", "expected", "got", "pass"}) EXPECT_TRUE(j["checks"][0].contains(key)) << key;
    EXPECT_EQ(j["value"]["num"], "2");
    EXPECT_EQ(j["expr"], "s[1]^4");
    EXPECT_EQ(j["backend"], "both");
}

TEST(Cli, IntegrateBackends) {
    const std::string space = "pbundle(sym(2,dual(S)),gr(3,6))";
    const std::string expr = "e(quot(sym(6,dual(S)),tensor(sym(4,dual(S)),o(-1)))) * (zeta + 2*s[1])";
    for (const char* backend : {"symbolic", "bott", "both"}) {
        const auto j = run_json({"integrate", "--space", space, "--expr", expr, "--backend", backend});
        EXPECT_EQ(j["value"]["num"], "440884080") << backend;
    }
}

TEST(Cli, RationalValuesStayExact) {
    const auto j = run_json({"integrate", "--space", "gr(2,4)", "--expr", "1/3*s[2,2]"});
    EXPECT_EQ(j["value"]["num"], "1");
    EXPECT_EQ(j["value"]["den"], "3");
}

TEST(Cli, Gwdt) {
    const auto j = run_json({"gwdt", "--dt", "1=60480,2=440884080"});
    EXPECT_EQ(j["table"]["1"]["num"], "60480");
    EXPECT_EQ(j["table"]["2"]["num"], "440899200");
    const auto inv = run_json({"gwdt", "--invert", "--gw", "1=60480,2=440899200"});
    EXPECT_EQ(inv["table"]["2"]["num"], "440884080");
}

TEST(Cli, AmVerify) {
    for (int d = 1; d <= 3; ++d) {
        const auto j = run_json({"am-verify", "--degree", std::to_string(d)});
        EXPECT_EQ(j["value"]["num"], "1");
        EXPECT_EQ(j["value"]["den"], std::to_string(d * d * d));
    }
}

TEST(Cli, Ledger) {
    const auto j = run_json({"ledger"});
    EXPECT_GE(j["checks"].size(), 14u);
    bool flagged = false;
    for (const auto& n : j["notes"]) flagged = flagged || n.get<std::string>().find("excess-intersection") != std::string::npos;
    EXPECT_TRUE(flagged);
}

TEST(Cli, Selftest) {
    const CliRun r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("criterion 7"), std::string::npos);
}

TEST(Cli, HumanOutput) {
    const CliRun r = run({"count", "lines", "--ambient", "4", "--degree", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("value:   2875"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("[pass] known value"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodeForParseErrors) {
    EXPECT_EQ(run({"integrate", "--space", "gr(2,4)", "--expr", "s[1]^"}).code, kExitParse);
    EXPECT_EQ(run({"integrate", "--space", "gr(2,4", "--expr", "s[1]"}).code, kExitParse);
    EXPECT_EQ(run({"gwdt", "--dt", "1:5"}).code, kExitParse);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
    EXPECT_EQ(run({"count", "cubics", "--ambient", "5", "--degree", "6"}).code, kExitParse);
    EXPECT_EQ(run({"integrate", "--space", "gr(2,4)", "--expr", "s[1]", "--backend", "magic"}).code, kExitParse);
    const auto j = run_json({"integrate", "--space", "gr(2,4)", "--expr", "s[1]+"}, kExitParse);
    EXPECT_EQ(j["error"]["kind"], "parse");
}

TEST(Cli, ExitCodeForMathErrors) {
    EXPECT_EQ(run({"integrate", "--space", "gr(4,2)", "--expr", "1"}).code, kExitMath);
    EXPECT_EQ(run({"integrate", "--space", "gr(2,4)", "--expr", "zeta"}).code, kExitMath);
    EXPECT_EQ(run({"count", "conics", "--ambient", "5", "--degree", "5", "--incidence", "2"}).code, kExitMath);
    EXPECT_EQ(run({"am-verify", "--degree", "4"}).code, kExitMath);
    EXPECT_EQ(run({"gwdt", "--dt", "2=5"}).code, kExitMath);
}

TEST(Cli, ExitCodeForMismatch) {
    EXPECT_EQ(run({"count", "lines", "--ambient", "5", "--degree", "6", "--incidence", "2", "--expect", "60480"}).code, kExitOk);
    EXPECT_EQ(run({"count", "lines", "--ambient", "5", "--degree", "6", "--incidence", "2", "--expect", "60481"}).code, kExitMismatch);
    const auto j = run_json({"integrate", "--space", "gr(2,4)", "--expr", "s[1]^4", "--expect", "3"}, kExitMismatch);
    EXPECT_EQ(j["checks"].back()["pass"], false);
    EXPECT_EQ(j["checks"].back()["expected"], "3");
    EXPECT_EQ(j["checks"].back()["got"], "2");
    EXPECT_EQ(run({"integrate", "--space", "gr(2,4)", "--expr", "s[1]^4", "--expect", "x"}).code, kExitParse);
}

#ifdef INTERSECT_CLI_PATH
TEST(Cli, BinaryExitCodes) {
    auto status = [](const std::string& args) {
        const std::string cmd = std::string(INTERSECT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("count lines --ambient 5 --degree 6 --incidence 2"), 0);
    EXPECT_EQ(status("integrate --space 'gr(2,4)' --expr 's[1'"), 2);
    EXPECT_EQ(status("integrate --space 'gr(2,4)' --expr 'zeta'"), 3);
    EXPECT_EQ(status("--help"), 0);
}
#endif
