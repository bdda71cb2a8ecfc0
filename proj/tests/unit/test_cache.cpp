#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "dsw/cache.hpp"
#include "dsw/planner.hpp"

using namespace dsw;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

EigenReport sample_report() {
    EigenReport r;
    r.n = 2;
    r.ell = 3;
    r.parity = Parity::even;
    r.signed_value = 64;
    r.magnitude = 64;
    r.vectors_tested = 6;
    r.consistent = true;
    r.degree_assignments_tested = {{2, 4, 6}};
    r.prime_to = {3, 5, 7, 11, 13};
    return r;
}

}  // namespace

TEST_CASE("report json round trip") {
    const auto r = sample_report();
    const auto j = report_to_json(r);
    CHECK(j["signed_value"] == "64");
    CHECK(j["constant"] == "c");
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(report_to_json(back).dump() == j.dump());
    CHECK_THROWS(report_from_json(nlohmann::json::parse(R"({"n":"2"})")));
}

TEST_CASE("cache lookup and store") {
    TempFile tmp("dsw_cache_unit.jsonl");
    ConstantCache cache(tmp.path);
    CHECK_FALSE(cache.lookup(2, 3, Parity::even).has_value());
    cache.store(sample_report());
    const auto hit = cache.lookup(2, 3, Parity::even);
    REQUIRE(hit.has_value());
    CHECK(hit->signed_value == 64);
    CHECK_FALSE(cache.lookup(2, 3, Parity::odd).has_value());
}

TEST_CASE("corrupt and stale lines are skipped with warnings") {
    TempFile tmp("dsw_cache_corrupt.jsonl");
    {
        std::ofstream out(tmp.path);
        out << "{not json\n";
        auto stale = report_to_json(sample_report());
        stale["engine_version"] = "dsw-0.0.1";
        stale["signed_value"] = "1";
        out << stale.dump() << '\n';
    }
    ConstantCache cache(tmp.path);
    std::vector<std::string> warnings;
    CHECK_FALSE(cache.lookup(2, 3, Parity::even, &warnings).has_value());
    CHECK_FALSE(warnings.empty());
    cache.store(sample_report());
    warnings.clear();
    CHECK(cache.lookup(2, 3, Parity::even, &warnings).has_value());
}

TEST_CASE("unwritable cache is an error") {
    ConstantCache cache("/nonexistent-dir/cache.jsonl");
    CHECK_THROWS_AS(cache.store(sample_report()), std::runtime_error);
}

TEST_CASE("planner consults the cache") {
    TempFile tmp("dsw_cache_planner.jsonl");
    ConstantCache cache(tmp.path);
    auto report = sample_report();
    report.parity = Parity::odd;
    report.signed_value = 33;  // planted value divisible by 11
    report.magnitude = 33;
    cache.store(report);
    SpaceSpec s;
    s.degrees = {3, 5, 7};
    s.prime = 11;
    s.n = 2;
    PlannerOptions o;
    o.cache = &cache;
    const auto a = check_applicability(s, o);
    CHECK(a.gates[1].status == GateStatus::fail);
}
