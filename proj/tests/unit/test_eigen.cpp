#include <doctest.h>

#include "dsw/eigen.hpp"

using namespace dsw;

TEST_CASE("degree assignments") {
    CHECK(default_degrees(3, Parity::even) == std::vector<int>{2, 4, 6});
    CHECK(default_degrees(3, Parity::odd) == std::vector<int>{1, 3, 5});
    CHECK(alternate_degrees(2, Parity::even) == std::vector<int>{2, 2});
    CHECK(alternate_degrees(2, Parity::odd) == std::vector<int>{3, 3});
    CHECK(parse_parity("odd") == Parity::odd);
    CHECK_THROWS_AS(parse_parity("both"), std::invalid_argument);
}

TEST_CASE("closed forms") {
    CHECK(closed_form_c1(2) == 3);
    CHECK(closed_form_c1(3) == 8);
    CHECK(closed_form_c1(4) == 30);
    CHECK(closed_form_c1(5) == 144);
    CHECK(closed_form_cn2(6) == 729);
    CHECK(conjectured_value(2, 3) == 64);
    CHECK(conjectured_value(2, 4) == 900);
}

TEST_CASE("single-block constants") {
    for (int ell = 2; ell <= 5; ++ell) {
        for (Parity p : {Parity::even, Parity::odd}) {
            CAPTURE(ell);
            const auto r = compute_constant(1, ell, p);
            CHECK(r.consistent);
            CHECK(r.signed_value == closed_form_c1(ell));
            CHECK(r.magnitude == closed_form_c1(ell));
        }
    }
}

// Frozen values. Every sign observed so far is positive.
TEST_CASE("two- and three-block constants") {
    struct Row {
        int n, ell;
        Parity p;
        int value;
    };
    for (const Row& r : {Row{2, 2, Parity::even, 9}, Row{2, 2, Parity::odd, 9}, Row{3, 2, Parity::even, 27},
                         Row{3, 2, Parity::odd, 27}, Row{2, 3, Parity::even, 64}, Row{2, 3, Parity::odd, 32}}) {
        CAPTURE(r.n);
        CAPTURE(r.ell);
        const auto rep = compute_constant(r.n, r.ell, r.p);
        CHECK(rep.signed_value == r.value);
        CHECK(rep.consistent);
    }
}

TEST_CASE("report fields") {
    EigenOptions o;
    o.sample = 7;
    o.seed = 99;
    o.threads = 2;
    const auto r = compute_constant(2, 2, Parity::even, o);
    CHECK(r.n == 2);
    CHECK(r.ell == 2);
    CHECK(r.seed == 99);
    CHECK(r.prime_to == std::vector<int>{5, 7, 11, 13});
    const auto plain = compute_constant(2, 2, Parity::even);
    CHECK(r.vectors_tested == plain.vectors_tested + 7);
    CHECK(r.signed_value == plain.signed_value);
}

TEST_CASE("sampling is reproducible and thread-count independent") {
    EigenOptions a, b;
    a.sample = b.sample = 20;
    a.threads = 1;
    b.threads = 3;
    const auto ra = compute_constant(1, 3, Parity::odd, a);
    const auto rb = compute_constant(1, 3, Parity::odd, b);
    CHECK(ra.signed_value == rb.signed_value);
    CHECK(ra.vectors_tested == rb.vectors_tested);
}

TEST_CASE("guards and invalid input") {
    CHECK_THROWS_AS(compute_constant(0, 2, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(compute_constant(1, 1, Parity::even), std::invalid_argument);
    CHECK_THROWS_AS(compute_constant(7, 2, Parity::even), std::invalid_argument);
    EigenOptions mixed;
    mixed.degrees = std::vector<int>{1, 2};
    CHECK_THROWS_AS(compute_constant(1, 2, Parity::even, mixed), std::invalid_argument);
    EigenOptions wrong;
    wrong.degrees = std::vector<int>{1, 3};
    CHECK_THROWS_AS(compute_constant(1, 2, Parity::even, wrong), std::invalid_argument);
}

TEST_CASE("conjecture scan rows") {
    const auto rows = conjecture_scan(2, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].match == "both");
    CHECK(rows[3].n == 2);
    CHECK(rows[3].ell == 3);
    CHECK(rows[3].c == 64);
    CHECK(rows[3].d == 32);
    CHECK(rows[3].match == "c");
}
