#include <doctest.h>

#include "dsw/elements.hpp"

using namespace dsw;

namespace {

GroupRingElement make(int k, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    GroupRingElement a(k);
    for (const auto& [images, c] : terms) a.add_term(Permutation(images), c);
    return a;
}

}  // namespace

TEST_CASE("full symmetrizers") {
    CHECK(build_shat(1) == GroupRingElement::one(1));
    const auto s3 = build_shat(3);
    CHECK(s3.size() == 6);
    for (const auto& [sigma, c] : s3.terms()) CHECK(c == sigma.sign());
    const auto b3 = build_sbar(3);
    for (const auto& [sigma, c] : b3.terms()) CHECK(c == 1);
    CHECK_THROWS_AS(build_shat(0), std::invalid_argument);
    CHECK_THROWS_AS(build_sbar(kMaxSymmetrizerArity + 1), std::invalid_argument);
}

TEST_CASE("switching sets and t elements") {
    CHECK(switching_set(2, 3) ==
          std::vector<Permutation>{Permutation({2, 1, 3}), Permutation({1, 2, 3}), Permutation({1, 3, 2})});
    CHECK(switching_set(1, 3) ==
          std::vector<Permutation>{Permutation({1, 2, 3}), Permutation({2, 1, 3}), Permutation({2, 3, 1})});
    CHECK(switching_set(3, 3) ==
          std::vector<Permutation>{Permutation({3, 1, 2}), Permutation({1, 3, 2}), Permutation({1, 2, 3})});
    CHECK(build_that(2, 3) == make(3, {{{2, 1, 3}, -1}, {{1, 2, 3}, 1}, {{1, 3, 2}, -1}}));
    CHECK(build_tbar(2, 3) == make(3, {{{2, 1, 3}, 1}, {{1, 2, 3}, 1}, {{1, 3, 2}, 1}}));
    CHECK_THROWS_AS(switching_set(4, 3), std::invalid_argument);
}

TEST_CASE("block embeddings") {
    const auto b2 = build_beta(2);
    CHECK(tensor_embed({GroupRingElement::one(1), b2}) == make(3, {{{1, 2, 3}, 1}, {{1, 3, 2}, -1}}));
    CHECK(tensor_embed({b2, GroupRingElement::one(1)}) == make(3, {{{1, 2, 3}, 1}, {{2, 1, 3}, -1}}));
    CHECK(tensor_embed({b2, b2}) == make(4, {{{1, 2, 3, 4}, 1}, {{2, 1, 3, 4}, -1}, {{1, 2, 4, 3}, -1}, {{2, 1, 4, 3}, 1}}));
    CHECK(embed_at(b2, 1, 3) == tensor_embed({GroupRingElement::one(1), b2}));
    CHECK(embed_at(b2, 0, 2) == b2);
    CHECK_THROWS_AS(embed_at(b2, 2, 3), std::invalid_argument);
}

TEST_CASE("beta expansions") {
    CHECK(build_beta(1) == GroupRingElement::one(1));
    CHECK(build_beta(2) == make(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
    CHECK(build_beta(3) == make(3, {{{1, 2, 3}, 1}, {{1, 3, 2}, -1}, {{2, 3, 1}, -1}, {{3, 2, 1}, 1}}));
    CHECK(left_rotation(3) == Permutation({2, 3, 1}));
    CHECK(left_rotation(4) == Permutation({2, 3, 4, 1}));
    for (int k = 2; k <= 12; ++k) {
        CAPTURE(k);
        const auto beta = build_beta(k);
        CHECK(beta.size() == (std::size_t{1} << (k - 1)));
        CHECK(beta.coefficient(Permutation::identity(k)) == 1);
    }
    CHECK_THROWS_AS(build_beta(0), std::invalid_argument);
    CHECK_THROWS_AS(build_beta(kMaxBetaArity + 1), std::invalid_argument);
}

TEST_CASE("beta_k squared is k beta_k") {
    for (int k = 1; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(verify_dsw(k));
        CHECK(build_beta(k) * build_beta(k) == Integer(k) * build_beta(k));
    }
}

TEST_CASE("symmetrizers factor through switching sums") {
    for (int k = 3; k <= 6; ++k) {
        CAPTURE(k);
        const auto one = GroupRingElement::one(1);
        CHECK(operator_composite(build_that(1, k), tensor_embed({one, build_shat(k - 1)})) == build_shat(k));
        CHECK(operator_composite(build_that(k, k), tensor_embed({build_shat(k - 1), one})) == build_shat(k));
        CHECK(operator_composite(build_tbar(1, k), tensor_embed({one, build_sbar(k - 1)})) == build_sbar(k));
        CHECK(operator_composite(build_tbar(k, k), tensor_embed({build_sbar(k - 1), one})) == build_sbar(k));
    }
}
