#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "commands.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = olm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::filesystem::path scratch_dir() {
    auto p = std::filesystem::temp_directory_path() / "olmul_cli_test";
    std::filesystem::create_directories(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"verify", "--n", "x"}).code == 2);
    CHECK(run_cli({"verify", "--mode", "half"}).code == 2);
    CHECK(run_cli({"verify", "--n", "11", "--sweep", "exhaustive"}).code == 2);
    CHECK(run_cli({"verify", "--n", "3"}).code == 2);
    CHECK(run_cli({"verify", "--sweep", "fixed", "--x", "0.1"}).code == 2);
    CHECK(run_cli({"table3", "--k", "0"}).code == 2);
    CHECK(run_cli({"trace", "--x", "0.12", "--y", "0.1"}).code == 2);
    CHECK(run_cli({"profile", "--out", "/nonexistent-dir/profile.csv"}).code == 2);
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("verify exhaustive n=8") {
    const auto r = run_cli({"verify", "--n", "8", "--mode", "truncated", "--sweep", "exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pairs=65536") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify a fixed zero operand") {
    const auto r = run_cli({"verify", "--n", "8", "--sweep", "fixed", "--x", "0", "--y", "0.1011"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max_error=0 ") != std::string::npos);
    CHECK(r.out.find("z=00000000") != std::string::npos);
}

TEST_CASE("random verification is reproducible") {
    const std::vector<std::string> args{"verify", "--n", "16", "--mode", "both", "--sweep", "random", "--trials",
                                        "20000", "--seed", "7"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 6);
}

TEST_CASE("table3 output") {
    const auto csv = run_cli({"table3", "--k", "8"});
    CHECK(csv.code == 0);
    const auto l = lines(csv.out);
    REQUIRE(l.size() == 6);
    CHECK(l[1].ends_with(",72,136,200,264"));
    CHECK(l[2].ends_with(",64,128,192,256"));
    CHECK(l[3].ends_with(",96,160,224,288"));
    CHECK(l[4].ends_with(",19,27,35,43"));
    CHECK(l[5].ends_with(",19,27,35,43"));
    CHECK(lines(run_cli({"table3", "--k", "1"}).out)[4].ends_with(",12,20,28,36"));
    CHECK(run_cli({"table3", "--format", "text"}).out.find("43") != std::string::npos);
}

TEST_CASE("profile export") {
    const auto path = scratch_dir() / "profile.csv";
    const auto r = run_cli({"profile", "--n", "8", "--mode", "truncated", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("full=121 truncated=57") != std::string::npos);
    const auto l = lines(slurp(path));
    REQUIRE(l.size() == 12);
    CHECK(l[0] == "cycle,stage,count,positions");

    const auto full = run_cli({"profile", "--n", "8", "--mode", "full"});
    CHECK(full.code == 0);
    CHECK(lines(full.out)[1] == "1,init,11,1;2;3;4;5;6;7;8;9;10;11");
    CHECK(full.err.find("ratio=") != std::string::npos);
}

TEST_CASE("trace rows") {
    const auto r = run_cli({"trace", "--n", "8", "--mode", "truncated", "--x", "0.1", "--y", "+0-"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 12);
    CHECK(l[0] == "j,x_in,y_in,residual,v_hat,z,active_count");
    CHECK(l[1].rfind("-3,1,1,", 0) == 0);
    CHECK(l[1].ends_with(",,,4"));
    CHECK(l[11].rfind("7,0,0,", 0) == 0);
    CHECK(run_cli({"trace", "--n", "8", "--x", "0.1", "--y", "0.1", "--format", "text"}).code == 0);
}

TEST_CASE("pipeline stats and occupancy") {
    const auto path = scratch_dir() / "pipe.csv";
    const auto r = run_cli({"pipeline", "--n", "16", "--k", "8", "--seed", "3", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("fill_latency") == 20);
    CHECK(j.at("total_cycles") == 27);
    const auto l = lines(slurp(path));
    CHECK(l[0] == "cycle,stage,stream_id,z_digit,active_count");
    CHECK(l.size() == 1 + 8 * 20);
}

}  // TEST_SUITE
