#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct CmdResult {
    int code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("WINDOWLAB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "WINDOWLAB_BIN must point at the built binary");
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return CmdResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

}  // namespace

TEST_CASE("verify --seq") {
    const auto r = run_cli("verify --seq 0110100");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK(j["t"] == 1);
    CHECK(j["n"] == 7);
    CHECK(j["differences"]["1010-0101"] == 1);
}

TEST_CASE("verify --exhaustive") {
    const auto r = run_cli("verify --exhaustive --min-n 4 --max-n 4");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["checked"] == 16);
    CHECK(j["violations"].empty());
    CHECK(j["t_histogram"] == Json{{"0", 16}});
}

TEST_CASE("verify --random requires a seed and is reproducible") {
    CHECK(run_cli("verify --random --len 50").code == 2);
    const auto a = run_cli("verify --random --len 50 --seed 9");
    const auto b = run_cli("verify --random --len 50 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("count in json and tsv") {
    const auto r = run_cli("count --seq 0101 --k 4");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["counts"]["1010"] == 2);
    CHECK(j["counts"]["0101"] == 2);
    CHECK(j["counts"]["0000"] == 0);

    const auto tsv = run_cli("count --seq 0101 --k 4 --format tsv");
    CHECK(tsv.code == 0);
    CHECK(tsv.out.substr(0, 14) == "pattern\tcount\n");
    CHECK(std::count(tsv.out.begin(), tsv.out.end(), '\n') == 17);
}

TEST_CASE("count reads @file input with whitespace stripped") {
    const std::string path = "/tmp/windowlab_cli_seq.txt";
    std::ofstream(path) << " 01\n101\t00 \n";
    const auto direct = run_cli("count --seq 0110100 --k 4");
    const auto from_file = run_cli("count --seq @" + path + " --k 4");
    CHECK(from_file.code == 0);
    CHECK(from_file.out == direct.out);
    CHECK(run_cli("count --seq @/tmp/windowlab_missing.txt --k 4").code == 2);
}

TEST_CASE("delta subcommand") {
    const auto r = run_cli("delta --context 001011 --bit 0");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["lost"] == Json::array({"0010", "0101", "1011"}));
    CHECK(j["delta_difference"] == 1);
    CHECK(run_cli("delta --context 0010 --bit 0").code == 2);
    CHECK(run_cli("delta --context 001011 --bit 2").code == 2);
}

TEST_CASE("tables writes six files and reports discrepancies") {
    const auto r = run_cli("tables --out /tmp/windowlab_tables");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["tables_consistent"] == true);
    CHECK(j["oracle_failures"].empty());
    CHECK(j["realizations_checked"] == 256);
    bool has_known = false;
    for (const auto& d : j["published_diffs"])
        has_known = has_known || (d["table"] == "adjoined0" && d["row"] == "1100111");
    CHECK(has_known);
    for (const char* name :
         {"basis.tsv", "lost.tsv", "adjoined0.tsv", "adjoined1.tsv", "delta0.tsv", "delta1.tsv"}) {
        std::ifstream in(std::string("/tmp/windowlab_tables/") + name);
        CHECK(in.good());
    }
    const auto md = run_cli("tables --out /tmp/windowlab_tables_md --format md");
    CHECK(md.code == 0);
    std::ifstream in("/tmp/windowlab_tables_md/basis.md");
    std::string first;
    std::getline(in, first);
    CHECK(first.substr(0, 12) == "| Sequence |");
}

TEST_CASE("discover") {
    const auto r = run_cli("discover --k 2");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["rank"] == 1);
    CHECK(j["functionals"][0]["coeffs"] == Json{{"01", 1}, {"10", -1}});

    const auto both = run_cli("discover --k 4 --method both");
    CHECK(both.code == 0);
    const auto jb = Json::parse(both.out);
    CHECK(jb["agreement"] == true);
    CHECK(jb["rank"] == 7);

    // the certified k=6 enumeration is far beyond the default budget
    CHECK(run_cli("discover --k 6 --method empirical").code == 2);
}

TEST_CASE("reversal-report") {
    const auto r = run_cli("reversal-report --k 4");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["identical_pairs"] ==
          Json::array({Json::array({"0001", "1000"}), Json::array({"0111", "1110"})}));
    CHECK(j["equal_difference_classes"].size() == 1);
    CHECK(j["equal_difference_classes"][0].size() == 4);
    for (const auto& [text, witness] : j["counterexamples"].items())
        CHECK(witness.is_string());
}

TEST_CASE("bench") {
    const auto r = run_cli("bench --len 200000 --seed 3 --k 4");
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["vectors_equal"] == true);
    CHECK(j["rolling_seconds"].get<double>() > 0.0);
}

TEST_CASE("usage errors exit 2, output is worker-count independent") {
    CHECK(run_cli("verify --seq 01a1").code == 2);
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("count --seq 0101 --k 4 --bogus-flag").code == 2);
    CHECK(run_cli("verify --seq 0101 --random --len 3 --seed 1").code == 2);
    CHECK(run_cli("--help").code == 0);

    const auto w1 = run_cli("verify --exhaustive --min-n 1 --max-n 10 --workers 1");
    const auto w3 = run_cli("verify --exhaustive --min-n 1 --max-n 10 --workers 3");
    CHECK(w1.code == 0);
    CHECK(w1.out == w3.out);
}

TEST_CASE("WINDOW_LAB_WORKERS is the --workers default") {
    const auto flagged = run_cli("verify --exhaustive --min-n 1 --max-n 10 --workers 2");
    const char* bin = std::getenv("WINDOWLAB_BIN");
    const std::string cmd = "WINDOW_LAB_WORKERS=2 " + std::string(bin) +
                            " verify --exhaustive --min-n 1 --max-n 10 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(out == flagged.out);
}
