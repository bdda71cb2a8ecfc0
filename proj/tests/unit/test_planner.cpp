#include <doctest.h>

#include <filesystem>

#include "dsw/planner.hpp"

using namespace dsw;

namespace {

SpaceSpec spec(std::vector<int> degrees, int prime, int depth = 3) {
    SpaceSpec s;
    s.degrees = std::move(degrees);
    s.prime = prime;
    s.depth = depth;
    return s;
}

std::vector<Integer> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("spec parsing and validation") {
    const auto s = SpaceSpec::from_json(nlohmann::json::parse(R"({"degrees":[3,"5"],"prime":"7","depth":2})"));
    CHECK(s.degrees == std::vector<int>{3, 5});
    CHECK(s.prime == 7);
    CHECK(s.depth == 2);
    CHECK(s.n == 1);
    CHECK_THROWS_AS(SpaceSpec::from_json(nlohmann::json::parse(R"({"degrees":[3],"prime":7,"colour":1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::from_json(nlohmann::json::parse(R"({"prime":7})")), std::invalid_argument);
    CHECK_THROWS_AS(spec({3, 5}, 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec({3, 5}, 9).validate(), std::invalid_argument);
    CHECK_NOTHROW(spec({3, 5}, 7).validate());
}

TEST_CASE("b sequences") {
    CHECK(b_sequence(spec({3, 5}, 7)) == ints({0, 8, 32, 104}));
    CHECK(b_sequence(spec({3, 3}, 7)) == ints({0, 6, 24, 78}));
    CHECK(b_sequence(spec({3, 3}, 7, 0)) == ints({0}));
    CHECK(b_sequence(spec({2, 4, 6}, 7, 2)) == ints({0, 12, 60}));
    auto s = spec({3, 5}, 7);
    CHECK(b_n_sequence(s) == b_sequence(s));
    s.n = 2;
    CHECK(b_n_sequence(s) == ints({0, 16, 96, 496}));
    auto deep = spec({3, 5}, 7, 64);
    const auto b = b_sequence(deep);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] == 3 * b[i - 1] + 8);
}

TEST_CASE("k sequences") {
    CHECK(k_sequence(5, 15, KVariant::plain) == std::vector<long long>{2, 3, 7, 11, 13});
    CHECK(k_sequence(5, 15, KVariant::odd_form) == std::vector<long long>{3, 7, 11, 13});
    CHECK(k_sequence(3, 8, KVariant::plain) == std::vector<long long>{2, 5, 7});
    const auto first = first_k_values(7, 30, KVariant::plain);
    REQUIRE(first.size() == 30);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i] % 7 != 0);
        for (std::size_t j = 0; j < i; ++j) CHECK(first[i] % first[j] != 0);
    }
}

TEST_CASE("applicability of the worked examples") {
    const auto a = check_applicability(spec({3, 5}, 7));
    CHECK(a.flag(kSuspensionRetracts).applies);
    CHECK(a.flag(kExteriorSplitting).applies);
    CHECK(a.flag(kFiniteHSpaceProduct).applies);
    CHECK(a.flag(kRankTwoProduct).applies);
    CHECK_FALSE(a.flag(kHomologyRetractsRankP).applies);
    CHECK(a.warnings.empty());

    const auto gap = check_applicability(spec({3, 5, 7, 9}, 5));
    CHECK_FALSE(gap.flag(kSuspensionRetracts).applies);
    REQUIRE_FALSE(gap.flag(kSuspensionRetracts).reasons.empty());
    CHECK(gap.flag(kSuspensionRetracts).reasons.front().find("gap") != std::string::npos);

    const auto mixed = check_applicability(spec({2, 5}, 7));
    for (const auto& f : mixed.flags) CHECK_FALSE(f.applies);
    CHECK_FALSE(mixed.warnings.empty());

    const auto rank_p = check_applicability(spec({1, 3, 5}, 3));
    CHECK(rank_p.flag(kHomologyRetractsRankP).applies);
    CHECK_FALSE(rank_p.flag(kSuspensionRetracts).applies);

    CHECK_THROWS_AS(a.flag("no_such_flag"), std::out_of_range);
}

TEST_CASE("gcd gates") {
    auto s = spec({2, 4, 6}, 7);
    const auto a = check_applicability(s);
    REQUIRE(a.gates.size() == 2);
    CHECK(a.gates[0].status == GateStatus::pass);
    CHECK(a.gates[1].status == GateStatus::pass);
    s.n = 2;  // 2*3+1 = 7
    CHECK(check_applicability(s).gates[0].status == GateStatus::fail);
    s = spec({3, 5, 7}, 11);
    s.n = 2;  // d_{2,3} = 32, computed on demand
    const auto computed = check_applicability(s);
    CHECK(computed.gates[1].status == GateStatus::pass);
    PlannerOptions offline;
    offline.compute_missing = false;
    CHECK(check_applicability(s, offline).gates[1].status == GateStatus::unknown);
}

TEST_CASE("plans") {
    auto s = spec({3, 5}, 7, 2);
    const auto r = plan(s);
    CHECK(r.b == ints({0, 8, 32}));
    REQUIRE(r.splitting_identity.has_value());
    CHECK(*r.splitting_identity);
    for (const auto& res : r.residuals) CHECK(res.nonnegative);
    REQUIRE(r.stable_range.size() == 2);
    CHECK(r.stable_range[0].j_max == 14);
    CHECK(r.stable_range[1].j_max == 38);
    bool saw_lambda = false;
    for (const auto& f : r.factors) {
        if (f.theorem == kFiniteHSpaceProduct && f.series && f.series->to_string() == "1 + t^3 + t^5 + t^8") {
            saw_lambda = true;
        }
    }
    CHECK(saw_lambda);
    CHECK(to_json(r).dump() == to_json(plan(s)).dump());

    const auto mixed = plan(spec({2, 5}, 7));
    CHECK(mixed.factors.empty());
    CHECK_FALSE(mixed.warnings.empty());
}

TEST_CASE("stable range") {
    CHECK(stable_range(spec({3, 3}, 7, 2)).size() == 2);
    CHECK(stable_range(spec({3, 3}, 7, 2))[1].j_max == 30);
    CHECK(stable_range(spec({3, 5}, 7, 1))[0].j_max == 14);
    CHECK(stable_range(spec({2, 4, 6}, 7, 1))[0].j_max == 16);
    CHECK_THROWS_AS(stable_range(spec({3, 5, 7, 9}, 5)), std::invalid_argument);
}
