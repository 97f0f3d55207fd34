// Drives the mmt binary end to end: output text and the 0/1/2 exit code
// contract. Paths come from MMT_CLI and MMT_FIXTURE_DIR.
#include "mmt/fixtures.hpp"
#include "mmt/io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

int main() {
    const char* cli_env = std::getenv("MMT_CLI");
    const char* fix_env = std::getenv("MMT_FIXTURE_DIR");
    if (!cli_env || !fix_env) {
        std::cerr << "MMT_CLI and MMT_FIXTURE_DIR must be set\n";
        return 1;
    }
    const std::string cli = cli_env;
    const std::string fixtures = fix_env;
    const std::string tmp = std::filesystem::temp_directory_path() / "mmt_cli_test";
    std::filesystem::create_directories(tmp);

    const std::string identity3 = R"([["1","0","0"],["0","1","0"],["0","0","1"]])";
    write(tmp + "/gen_s.json",
          std::string(R"({"q":"s","a":)") + identity3 + R"(,"b":)" + identity3 +
              R"(,"c":)" + identity3 + "}");
    write(tmp + "/gen_sign.json",
          std::string(R"({"q":"id","a":[["1","0","0"],["0","-1","0"],["0","0","-1"]],"b":)") +
              identity3 + R"(,"c":)" + identity3 + "}");
    write(tmp + "/gen_bad_shape.json",
          std::string(R"({"q":"id","a":)") + identity3 +
              R"(,"b":[["1","0","0"],["0","0","1"],["0","1","0"]],"c":)" + identity3 + "}");
    write(tmp + "/gens_sr.json",
          std::string(R"([{"q":"s","a":)") + identity3 + R"(,"b":)" + identity3 +
              R"(,"c":)" + identity3 + R"(},{"q":"r","a":)" + identity3 + R"(,"b":)" +
              identity3 + R"(,"c":)" + identity3 + "}]");
    write(tmp + "/gen_id2.json",
          R"({"q":"id","a":[["1","0"],["0","1"]],"b":[["1","0"],["0","1"]],"c":[["1","0"],["0","1"]]})");
    write(tmp + "/corrupt.json", "{ \"shape\": [3,3,");
    write(tmp + "/wrong.json",
          R"({"shape":[1,1,1],"terms":[{"x":[["2"]],"y":[["1"]],"z":[["1"]]}]})");

    auto r = run(cli + " verify " + fixtures + "/strassen_222.json");
    check(r.exit_code == 0 && contains(r.output, "valid, length 7"), "verify strassen");

    r = run(cli + " verify " + fixtures + "/laderman_333.json");
    check(r.exit_code == 0 && contains(r.output, "valid, length 23"), "verify laderman");

    r = run(cli + " verify " + fixtures + "/classical_234.json");
    check(r.exit_code == 2, "missing file gives exit 2");

    r = run(cli + " verify " + tmp + "/corrupt.json");
    check(r.exit_code == 2 && contains(r.output, "byte"), "corrupt file: exit 2 + position");

    r = run(cli + " verify " + tmp + "/wrong.json");
    check(r.exit_code == 1 && contains(r.output, "invalid"), "invalid decomposition: exit 1");

    r = run(cli + " expand " + fixtures + "/classical_222.json");
    check(r.exit_code == 0 && contains(r.output, "8 nonzero"), "expand classical <2,2,2>");

    r = run(cli + " act " + fixtures + "/classical_333.json -g " + tmp +
            "/gen_s.json --check-auto");
    check(r.exit_code == 0 && contains(r.output, "beta=(123)") &&
              contains(r.output, "1^3 3^8"),
          "rotation automorphism report");

    r = run(cli + " act " + fixtures + "/laderman_333.json -g " + tmp + "/gen_s.json -o " +
            tmp + "/lad_s.json");
    check(r.exit_code == 0, "act writes an image");
    r = run(cli + " verify " + tmp + "/lad_s.json");
    check(r.exit_code == 0 && contains(r.output, "valid, length 23"),
          "rotation image of laderman verifies");

    r = run(cli + " act " + fixtures + "/strassen_222.json -g " + tmp + "/gen_id2.json -o " +
            tmp + "/str_id.json");
    check(r.exit_code == 0, "identity action runs");
    {
        std::ifstream a(fixtures + "/strassen_222.json"), b(tmp + "/str_id.json");
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        auto da = mmt::parse_decomposition(sa.str());
        auto db = mmt::parse_decomposition(sb.str());
        check(da == db, "identity action preserves the multiset");
    }

    r = run(cli + " bound --partitions 2,1 3");
    check(r.exit_code == 0 && contains(r.output, "14 + 9 = 23"), "bound {2,1} {3}");

    r = run(cli + " bound --partitions 2,1 2,1");
    check(r.exit_code == 0 && contains(r.output, "11 + 6 + 6 + 3 = 26"), "bound {2,1} {2,1}");

    r = run(cli + " bound");
    check(r.exit_code == 0 && contains(r.output, "minimum over the table: 23"),
          "case table minimum");

    r = run(cli + " bound --rows");
    check(r.exit_code == 0 && contains(r.output, "{2,1}\t{3}\t14+9\t23"), "machine rows");

    r = run(cli + " bound -g " + tmp + "/gen_sign.json");
    check(r.exit_code == 0 && contains(r.output, "invariant length bound: 23"),
          "bound from a generator");

    r = run(cli + " split -g " + tmp + "/gen_sign.json");
    check(r.exit_code == 0 && contains(r.output, "total bound: 23") &&
              contains(r.output, "component sum equals the matmul tensor: yes"),
          "split report");

    r = run(cli + " symmetrize " + fixtures + "/classical_333.json -g " + tmp +
            "/gen_sign.json -o " + tmp + "/sym.json");
    check(r.exit_code == 0 && contains(r.output, "length 27 -> 27"),
          "symmetrize a termwise-fixed decomposition");
    r = run(cli + " verify " + tmp + "/sym.json");
    check(r.exit_code == 0, "symmetrized output verifies");

    r = run(cli + " symmetrize " + fixtures + "/classical_333.json -g " + tmp +
            "/gen_bad_shape.json");
    check(r.exit_code == 2 && contains(r.output, "unsupported generator shape"),
          "non-scalar second slot is rejected");

    r = run(cli + " closure " + tmp + "/gens_sr.json");
    check(r.exit_code == 0 && contains(r.output, "closure size: 6"), "closure of s and r");

    r = run(cli + " tau 2 2 2 7");
    check(r.exit_code == 0 && contains(r.output, "2.8074"), "tau of strassen");
    r = run(cli + " tau 3 3 3 21");
    check(r.exit_code == 0 && std::abs(std::atof(r.output.c_str()) - 2.7720) < 1e-3,
          "tau of a length-21 target");
    r = run(cli + " tau 1 1 1 2");
    check(r.exit_code == 2, "degenerate shape rejected");
    r = run(cli + " bound --partitions 2,1");
    check(r.exit_code == 2, "missing partition argument gives exit 2");
    r = run(cli + " --help");
    check(r.exit_code == 0 && contains(r.output, "verify"), "help exits 0");

    r = run(cli + " fixtures --dir " + tmp + "/fx");
    check(r.exit_code == 0, "fixtures command runs");
    std::size_t count = 0;
    for (auto& e : std::filesystem::directory_iterator(tmp + "/fx"))
        if (e.path().extension() == ".json") ++count;
    check(count == 29, "29 fixture files written");

    r = run("MMT_CYCLOTOMIC_ORDER=4 " + cli + " verify " + tmp + "/wrong.json");
    check(r.exit_code == 1, "env order accepted");
    r = run("MMT_CYCLOTOMIC_ORDER=0 " + cli + " verify " + tmp + "/wrong.json");
    check(r.exit_code == 2, "bad env order rejected");

    std::cout << (failures == 0 ? "all cli checks passed\n"
                                : std::to_string(failures) + " cli checks failed\n");
    return failures == 0 ? 0 : 1;
}
