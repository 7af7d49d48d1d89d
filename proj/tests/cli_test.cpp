// Drives the installed CLI binary end to end: output formats, persistent
// cache, and the documented exit codes (0 ok, 1 verification failure,
// 2 usage error).

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(WREATHCHAR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot spawn CLI");
    RunResult result;
    char buf[512];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

TEST(Cli, EvalValueAndNumeric) {
    RunResult r = run_cli("eval --k 3 --lambda '[[],[2],[]]' --rho '[[],[2],[]]' --numeric");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("w^2\n"), std::string::npos);
    EXPECT_NE(r.output.find("numeric: -0.5-0.866"), std::string::npos);
}

TEST(Cli, EvalMethodsAgree) {
    std::string key = "--k 3 --lambda '[[1],[2],[1]]' --rho '[[2],[1],[1]]'";
    RunResult mn = run_cli("eval " + key + " --method mn");
    RunResult row = run_cli("eval " + key + " --method row");
    RunResult oracle = run_cli("eval " + key + " --method oracle");
    EXPECT_EQ(mn.exit_code, 0);
    EXPECT_EQ(mn.output, row.output);
    EXPECT_EQ(mn.output, oracle.output);
}

TEST(Cli, TableGoldenBytesAcrossMethods) {
    RunResult a = run_cli("table --k 3 --n 2 --format json --method mn");
    RunResult b = run_cli("table --k 3 --n 2 --format json --method row");
    RunResult c = run_cli("table --k 3 --n 2 --format json --method oracle");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.output, c.output);
    RunResult again = run_cli("table --k 3 --n 2 --format json --method mn");
    EXPECT_EQ(a.output, again.output);
}

TEST(Cli, TableCsvAndOutFile) {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "wreathchar_cli_table.csv").string();
    RunResult r = run_cli("table --k 3 --n 1 --format csv --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "\"character\\class\",\"[[],[],[1]]\",\"[[],[1],[]]\",\"[[1],[],[]]\"");
    std::remove(path.c_str());
}

TEST(Cli, VerifySuitesPass) {
    EXPECT_EQ(run_cli("verify --k 3 --n 2 --suite orthogonality").exit_code, 0);
    EXPECT_EQ(run_cli("verify --k 3 --n 2 --suite degrees").exit_code, 0);
    EXPECT_EQ(run_cli("verify --k 2 --n 3 --suite methods").exit_code, 0);
    RunResult all = run_cli("verify --k 2 --n 2 --suite all");
    EXPECT_EQ(all.exit_code, 0);
    EXPECT_NE(all.output.find("[ ok ] row-orthogonality"), std::string::npos);
    EXPECT_NE(all.output.find("[ ok ] method-equivalence"), std::string::npos);
}

TEST(Cli, ModularReportOk) {
    RunResult r = run_cli("modular --k 2 --n 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("modular relation holds"), std::string::npos);
}

TEST(Cli, CoreQuotientRoundTrip) {
    RunResult fwd = run_cli("core-quotient --k 3 --partition '[4,2,1]'");
    EXPECT_EQ(fwd.exit_code, 0);
    EXPECT_NE(fwd.output.find("core: [1]"), std::string::npos);
    EXPECT_NE(fwd.output.find("quotient: [[1,1],[],[]]"), std::string::npos);
    RunResult inv = run_cli("core-quotient --k 3 --invert --core '[1]' --quotient '[[1,1],[],[]]'");
    EXPECT_EQ(inv.exit_code, 0);
    EXPECT_NE(inv.output.find("partition: [4,2,1]"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli("eval --k 3 --lambda '[[1],[]]' --rho '[[1],[]]'").exit_code, 2);
    EXPECT_EQ(run_cli("eval --k 3 --lambda '[[1],[],[]]' --rho '[[2],[],[]]'").exit_code, 2);
    EXPECT_EQ(run_cli("eval --k 3 --lambda 'nonsense' --rho '[[1],[],[]]'").exit_code, 2);
    EXPECT_EQ(run_cli("table --k 3 --n 15").exit_code, 2); // guard refusal
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("core-quotient --k 3 --invert --core '[3]' --quotient '[[],[],[]]'").exit_code, 2);
}

TEST(Cli, PersistentCacheWarmStart) {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "wreathchar_cli_cache.json").string();
    std::remove(path.c_str());
    RunResult cold = run_cli("eval --k 3 --lambda '[[1],[1],[1]]' --rho '[[1],[1],[1]]' --cache " + path);
    EXPECT_EQ(cold.exit_code, 0);
    EXPECT_TRUE(fs::exists(path));
    RunResult warm = run_cli("eval --k 3 --lambda '[[1],[1],[1]]' --rho '[[1],[1],[1]]' --cache " + path);
    EXPECT_EQ(warm.output, cold.output);
    std::string env_cmd = "WREATHCHAR_CACHE=" + path + " " + WREATHCHAR_CLI_PATH +
                          " eval --k 3 --lambda '[[1],[1],[1]]' --rho '[[1],[1],[1]]'";
    FILE* pipe = popen((env_cmd + " 2>&1").c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    char buf[256];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
    EXPECT_EQ(out, cold.output);
    std::remove(path.c_str());
}

} // namespace
