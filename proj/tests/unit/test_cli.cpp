#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using dsw::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"constants", "--no-such-flag"}).code == 2);
    CHECK(invoke({"elements"}).code == 2);
    CHECK(invoke({"elements", "--beta", "3", "--shat", "3"}).code == 2);
    CHECK(invoke({"plan", "--degrees", "3,5"}).code == 2);
    CHECK(invoke({"plan", "--degrees", "3,5", "--prime", "4"}).code == 2);
    CHECK(invoke({"--seed", "0xZZ", "verify", "--suite", "permgroup"}).code == 2);
    CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("constants") != std::string::npos);
}

TEST_CASE("elements") {
    const auto r = invoke({"--json", "elements", "--beta", "3"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["size"] == "4");
    CHECK(j["terms"][1]["permutation"] == "1,3,2");
    CHECK(j["terms"][1]["coefficient"] == "-1");
    const auto text = invoke({"elements", "--that", "2", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("3 terms") != std::string::npos);
    const auto big = invoke({"elements", "--beta", "9"});
    CHECK(big.out.find("more (use --dump)") != std::string::npos);
    CHECK(invoke({"elements", "--beta", "9", "--dump"}).out.find("more") == std::string::npos);
}

TEST_CASE("apply with builtins and element files") {
    const auto r = invoke({"apply", "--element", "beta:2", "--degrees", "1,3", "--word", "1,2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["word"] == "2,1");
    CHECK(j["terms"][1]["coefficient"] == "1");

    const auto path = std::filesystem::temp_directory_path() / "dsw_cli_element.txt";
    {
        std::ofstream out(path);
        out << "# swap\n2 2,1\n";
    }
    const auto f = invoke({"apply", "--element", path.string(), "--degrees", "2,4", "--word", "1,2", "--json"});
    std::filesystem::remove(path);
    REQUIRE(f.code == 0);
    CHECK(json_of(f)["terms"][0]["coefficient"] == "2");
    CHECK(invoke({"apply", "--element", "beta:3", "--degrees", "1", "--word", "1,2,1"}).code == 2);
}

TEST_CASE("constants and the cache") {
    const auto r = invoke({"constants", "--n", "1", "--ell", "2", "--parity", "even", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["signed_value"] == "3");

    const auto path = std::filesystem::temp_directory_path() / "dsw_cli_cache.jsonl";
    std::filesystem::remove(path);
    const std::vector<std::string> args{"--cache", path.string(), "--json", "constants", "--n", "2", "--ell", "2",
                                        "--parity", "odd"};
    const auto first = invoke(args);
    const auto second = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1);
    {
        std::ofstream corrupt(path, std::ios::app);
        corrupt << "garbage\n";
    }
    const auto third = invoke(args);
    CHECK(third.out == first.out);
    CHECK(third.err.find("warning") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(invoke({"constants", "--n", "7", "--ell", "2"}).code == 2);
    const auto scan = invoke({"--json", "constants", "--scan", "--max-n", "1", "--max-ell", "3"});
    REQUIRE(scan.code == 0);
    CHECK(json_of(scan)["rows"].size() == 2);
}

TEST_CASE("liedims and pbw-check") {
    const auto l = invoke({"liedims", "--degrees", "2,2", "--max-len", "2", "--json"});
    REQUIRE(l.code == 0);
    CHECK(json_of(l)["lengths"][1]["dims"]["4"] == "1");
    const auto p = invoke({"pbw-check", "--degrees", "3,5", "--N", "16", "--json"});
    REQUIRE(p.code == 0);
    CHECK(json_of(p)["equal"] == true);
    CHECK(json_of(p)["odd_equal"] == true);
    CHECK(invoke({"pbw-check", "--degrees", "2,2", "--N", "20", "--max-len", "2"}).code == 2);
}

TEST_CASE("plan and stable-range") {
    const auto r = invoke({"plan", "--degrees", "3,5", "--prime", "7", "--depth", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["b_sequence"] == nlohmann::json::array({"0", "8", "32"}));
    const auto spec = std::filesystem::temp_directory_path() / "dsw_cli_spec.json";
    {
        std::ofstream out(spec);
        out << R"({"degrees":[3,5],"prime":7,"depth":2})";
    }
    const auto from_file = invoke({"plan", "--spec", spec.string(), "--json"});
    CHECK(from_file.out == r.out);
    CHECK(invoke({"plan", "--spec", spec.string(), "--degrees", "3"}).code == 2);
    std::filesystem::remove(spec);

    const auto s = invoke({"stable-range", "--degrees", "3,3", "--prime", "7", "--depth", "2", "--json"});
    REQUIRE(s.code == 0);
    CHECK(json_of(s)["rows"][1]["j_max"] == "30");
    const auto bad = invoke({"stable-range", "--degrees", "3,5,7,9", "--prime", "5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("gap") != std::string::npos);
}

TEST_CASE("verify ledger and exit status") {
    const auto ok = invoke({"verify", "--suite", "permgroup", "--random", "10"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("0 failed") != std::string::npos);
    const auto lemmas = invoke({"--json", "verify", "--suite", "lemmas", "--max-k", "4", "--random", "5"});
    CHECK(lemmas.code == 1);
    const auto j = json_of(lemmas);
    CHECK(j["failed"] == "3");
}
