#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = msum::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string scratch_report() {
    return (std::filesystem::temp_directory_path() / "msum_cli_scratch.json").string();
}

// Set MSUM_UPDATE_GOLDEN=1 to rewrite the golden files from current output.
void check_golden(const std::string& name, const std::vector<std::string>& args) {
    const auto path = std::filesystem::path(MSUM_GOLDEN_DIR) / (name + ".txt");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    if (std::getenv("MSUM_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << r.out;
        return;
    }
    REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
    CHECK(r.out == slurp(path));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden renderings") {
    check_golden("m_4_7", {"m", "4", "7"});
    check_golden("m_1_9", {"m", "1", "9"});
    check_golden("m_9_26", {"m", "9", "26"});
    check_golden("m_5_8", {"m", "5", "8"});
    check_golden("sequence_23_11", {"sequence", "23", "11", "5"});
    check_golden("sequence_229_19", {"sequence", "229", "19", "4"});
    check_golden("sequence_239_119", {"sequence", "239", "119", "4"});
    check_golden("tower_9_11", {"tower", "9", "11", "4"});
    check_golden("exceptions_5", {"exceptions", "5"});
    check_golden("exceptions_7", {"exceptions", "7"});
    check_golden("table_12_csv", {"table", "--e-max", "12", "--format", "csv"});
}

TEST_CASE("m output names the values") {
    const auto a = run({"m", "4", "7"});
    CHECK(a.out.find("m=3, witness 4^0+4^1+4^2") != std::string::npos);
    CHECK(run({"m", "1", "9"}).out.find("m=9 (q≡1 case)") != std::string::npos);
    CHECK(run({"m", "9", "26"}).out.find("m=6") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"m", "4", "7", "--format", "json"}).out);
    CHECK(j["m"] == 3);
    CHECK(j["witness"] == nlohmann::json::array({0, 1, 2}));
}

TEST_CASE("sequence and exceptions renderings") {
    CHECK(run({"sequence", "23", "11", "5"}).out.find("(3,5,9,9,11)") != std::string::npos);
    CHECK(run({"sequence", "229", "19", "4"}).out.find("(5,8,11,19)") != std::string::npos);
    CHECK(run({"exceptions", "5"}).out.find("{(11,1,3),(61,1,4)}") != std::string::npos);
}

TEST_CASE("table csv is ordered and spot checks hold") {
    const auto r = run({"table", "--e-max", "12", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("e,q", 0) == 0);
    bool saw = false;
    std::pair<long, long> last{0, 0};
    while (std::getline(in, line)) {
        long e = 0, q = 0, mv = 0;
        char c = 0;
        std::istringstream row(line);
        row >> e >> c >> q >> c >> mv;
        CHECK(std::pair{e, q} > last);
        last = {e, q};
        if (e == 7 && q == 2) saw = mv == 3;
    }
    CHECK(saw);
}

TEST_CASE("table json parses") {
    const auto r = run({"table", "--e-max", "12", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_object());
    CHECK(j.contains("rows"));
}

TEST_CASE("exit codes") {
    const auto nc = run({"m", "6", "9"});
    CHECK(nc.code == 2);
    CHECK(nc.err.find("coprime") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "nonsense", "--report", scratch_report()}).code == 2);
    CHECK(run({"m", "4"}).code == 2);
    CHECK(run({"sequence", "23", "5", "3"}).code == 2);
    CHECK(run({"verify", "prop10", "--p-max", "47", "--report", scratch_report()}).code == 3);
    CHECK(run({"verify", "corollary8", "--e-max", "60", "--report", scratch_report()}).code == 0);
    CHECK(run({"claims"}).code == 0);
}

TEST_CASE("verify writes a report") {
    const auto path = std::filesystem::temp_directory_path() / "msum_cli_report.json";
    std::filesystem::remove(path);
    const auto r = run({"verify", "theorem1", "--e-max", "50", "--report", path.string()});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["claim_id"] == "theorem1");
    CHECK(j["violations"].empty());
    CHECK(j.contains("params"));
    std::filesystem::remove(path);
}

}  // TEST_SUITE
