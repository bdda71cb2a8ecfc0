#include <doctest.h>

#include <random>

#include "dsw/group_ring.hpp"
#include "dsw/permutation.hpp"

using namespace dsw;

TEST_CASE("permutations validate their one-line form") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,2,x"), std::invalid_argument);
    CHECK(Permutation::parse("(2,3,1)") == Permutation({2, 3, 1}));
    CHECK(Permutation::parse("2,3,1") == Permutation({2, 3, 1}));
    CHECK(Permutation({3, 1, 2}).to_string() == "3,1,2");
}

TEST_CASE("composition evaluates the right factor first") {
    CHECK(compose(Permutation({1, 3, 2}), Permutation({2, 3, 1})) == Permutation({3, 2, 1}));
    CHECK(compose(Permutation({2, 3, 1}), Permutation({1, 3, 2})) == Permutation({2, 1, 3}));
    CHECK(compose(Permutation({2, 3, 1}), Permutation({2, 3, 1}).inverse()).is_identity());
    CHECK_THROWS_AS(compose(Permutation({1, 2}), Permutation({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("sign counts inversions") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation({2, 1}).sign() == -1);
    CHECK(Permutation({2, 3, 1}).sign() == 1);
    CHECK(Permutation({4, 3, 2, 1}).sign() == 1);
    CHECK(Permutation({5, 4, 3, 2, 1}).sign() == 1);
    CHECK(Permutation({2, 1, 3, 4, 5, 6}).sign() == -1);
}

TEST_CASE("all_permutations enumerates S_k in lexicographic order") {
    const auto s3 = all_permutations(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == Permutation({1, 2, 3}));
    CHECK(s3.back() == Permutation({3, 2, 1}));
    CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("group ring arithmetic") {
    GroupRingElement a(3);
    a.add_term(Permutation({2, 1, 3}), 2);
    a.add_term(Permutation({2, 1, 3}), -2);
    CHECK(a.is_zero());

    const auto x = GroupRingElement::basis(Permutation({1, 3, 2}));
    const auto y = GroupRingElement::basis(Permutation({2, 3, 1}));
    CHECK(x * y == GroupRingElement::basis(Permutation({3, 2, 1})));
    CHECK(operator_composite(y, x) == x * y);
    CHECK((x + y).size() == 2);
    CHECK((x - x).is_zero());
    CHECK((Integer(3) * x).coefficient(Permutation({1, 3, 2})) == 3);
    CHECK_THROWS(x + GroupRingElement::one(2));
}

TEST_CASE("text round trip of group ring elements") {
    GroupRingElement a(3);
    a.add_term(Permutation({1, 2, 3}), 1);
    a.add_term(Permutation({3, 2, 1}), Integer("-123456789012345678901234567890"));
    CHECK(GroupRingElement::from_text(a.to_text()) == a);
    CHECK(GroupRingElement::from_text("# comment only\n", 4) == GroupRingElement(4));
    CHECK_THROWS_AS(GroupRingElement::from_text("1 1,2\n2 1,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(GroupRingElement::from_text("x 1,2\n"), std::invalid_argument);
}

TEST_CASE("group ring product is associative on random elements") {
    std::mt19937_64 rng(17);
    const auto random = [&](int k) {
        GroupRingElement e(k);
        auto perms = all_permutations(k);
        for (int t = 0; t < 5; ++t) {
            e.add_term(perms[rng() % perms.size()], static_cast<int>(rng() % 7) - 3);
        }
        return e;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 1 + static_cast<int>(trial % 5);
        const auto a = random(k), b = random(k), c = random(k);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}
