#include <doctest.h>

#include "dsw/elements.hpp"
#include "dsw/graded.hpp"
#include "dsw/matrix.hpp"

using namespace dsw;

TEST_CASE("graded modules") {
    const GradedModule v({3, 5, 2});
    CHECK(v.rank() == 3);
    CHECK(v.total_degree() == 10);
    CHECK(v.min_degree() == 2);
    CHECK(v.parity() == ParityClass::mixed);
    CHECK(GradedModule({1, 3}).parity() == ParityClass::all_odd);
    CHECK(GradedModule::parse("2, 4").parity() == ParityClass::all_even);
    CHECK_THROWS_AS(GradedModule({}), std::invalid_argument);
    CHECK_THROWS_AS(GradedModule({0}), std::invalid_argument);
    CHECK_THROWS_AS(GradedModule::parse("2,,4"), std::invalid_argument);
}

TEST_CASE("tensor words") {
    const TensorWord w{2, 1, 3};
    CHECK(w.length() == 3);
    CHECK(w.letter(1) == 2);
    CHECK(w.letter(3) == 3);
    CHECK(w.letters() == std::vector<int>{2, 1, 3});
    CHECK(w.to_string() == "2,1,3");
    CHECK(TensorWord::parse("2,1,3") == w);
    CHECK(w.degree(GradedModule({1, 3, 5})) == 9);
    CHECK(TensorWord{1, 2} < TensorWord{1, 1, 1});
    CHECK(TensorWord{1, 2} < TensorWord{2, 1});
    CHECK_THROWS(w.check_against(GradedModule({1, 3})));
    CHECK_THROWS_AS(TensorWord(std::vector<int>(kMaxTensorLength + 1, 1)), std::invalid_argument);
}

TEST_CASE("Koszul-signed action") {
    const GradedModule odd({1, 3}), even({2, 4}), mixed({1, 2});
    CHECK(act(Permutation({2, 1}), TensorWord{1, 2}, odd) == std::pair{TensorWord{2, 1}, -1});
    CHECK(act(Permutation({2, 1}), TensorWord{1, 2}, even) == std::pair{TensorWord{2, 1}, 1});
    CHECK(act(Permutation({2, 1}), TensorWord{1, 2}, mixed) == std::pair{TensorWord{2, 1}, 1});
    // r_i = w_{sigma(i)}
    CHECK(act(Permutation({2, 3, 1}), TensorWord{1, 2, 2}, odd).first == TensorWord{2, 2, 1});
    CHECK(act(Permutation({3, 1, 2}), TensorWord{1, 1, 2}, odd) == std::pair{TensorWord{2, 1, 1}, 1});
    CHECK_THROWS_AS(act(Permutation({2, 1}), TensorWord{1, 2, 1}, odd), std::invalid_argument);
}

TEST_CASE("tensor vectors") {
    const GradedModule v({1, 3});
    const auto a = TensorVector::from_word(v, TensorWord{1, 2});
    const auto b = TensorVector::from_word(v, TensorWord{2, 1}, 3);
    const auto sum = a + b;
    CHECK(sum.size() == 2);
    CHECK(sum.coefficient(TensorWord{2, 1}) == 3);
    CHECK((sum - sum).is_zero());
    CHECK((Integer(2) * sum).ratio_to(sum) == Integer(2));
    CHECK_FALSE((a + Integer(2) * b).ratio_to(sum).has_value());
    CHECK(tensor_product(a, b).coefficient(TensorWord{1, 2, 2, 1}) == 3);
    CHECK(sum.to_text() == "1 1,2\n3 2,1\n");
}

TEST_CASE("applying elements") {
    const GradedModule even({2, 4, 6}), odd({1, 3, 5});
    const auto b2_even = apply(build_beta(2), TensorVector::from_word(even, TensorWord{1, 2}));
    CHECK(b2_even.coefficient(TensorWord{1, 2}) == 1);
    CHECK(b2_even.coefficient(TensorWord{2, 1}) == -1);
    const auto b2_odd = apply(build_beta(2), TensorVector::from_word(odd, TensorWord{1, 2}));
    CHECK(b2_odd.coefficient(TensorWord{2, 1}) == 1);
    // [x, x] vanishes on even x and doubles on odd x.
    CHECK(apply(build_beta(2), TensorVector::from_word(even, TensorWord{1, 1})).is_zero());
    CHECK(apply(build_beta(2), TensorVector::from_word(odd, TensorWord{1, 1})).coefficient(TensorWord{1, 1}) == 2);
    CHECK(apply(build_shat(3), TensorVector::from_word(even, TensorWord{1, 2, 1})).is_zero());
    CHECK(apply(build_sbar(3), TensorVector::from_word(odd, TensorWord{1, 2, 1})).is_zero());
    CHECK(apply(build_sbar(3), TensorVector::from_word(even, TensorWord{1, 2, 1})).size() == 3);
}

TEST_CASE("basis enumeration") {
    const GradedModule v({1, 2});
    CHECK(basis_words(v, 3).size() == 8);
    CHECK(basis_words(v, 3).front() == TensorWord{1, 1, 1});
    const auto deg4 = basis_words(v, 3, 4);
    CHECK(deg4.size() == 3);
    for (const auto& w : deg4) CHECK(w.degree(v) == 4);
}

TEST_CASE("operator matrices and exact rank") {
    const GradedModule v({2, 4});
    CHECK(operator_matrix(GroupRingElement::one(2), v, 2) == IntMatrix::identity(4));
    const auto m = operator_matrix(build_beta(2), v, 2);
    CHECK(m.trace() == 2);
    CHECK(rank_exact(m) == 1);
    CHECK(rank_exact(m, 5u) == 1);
    IntMatrix two(2, 2);
    two.at(0, 0) = 2;
    two.at(0, 1) = 4;
    two.at(1, 0) = 1;
    two.at(1, 1) = 2;
    CHECK(rank_exact(two) == 1);
    IntMatrix p(1, 1);
    p.at(0, 0) = 7;
    CHECK(rank_exact(p) == 1);
    CHECK(rank_exact(p, 7u) == 0);
    const auto blocks = content_blocks(GradedModule({2, 2}), 2);
    CHECK(blocks.size() == 3);
}
