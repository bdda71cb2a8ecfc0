#include "dsw/lie.hpp"

#include <cmath>
#include <stdexcept>

#include "dsw/elements.hpp"
#include "dsw/matrix.hpp"
#include "dsw/parallel.hpp"

namespace dsw {

namespace {

void check_size(const GradedModule& module, int k) {
    if (k < 1) throw std::invalid_argument("bracket length must be at least 1");
    if (std::pow(static_cast<double>(module.rank()), k) > static_cast<double>(kMaxLieWords)) {
        throw std::length_error("l^k exceeds the word guard of " + std::to_string(kMaxLieWords));
    }
}

}  // namespace

GradedDims lie_dims(const GradedModule& module, int k, std::optional<long long> max_degree, unsigned threads) {
    check_size(module, k);
    const GroupRingElement beta = build_beta(k);
    auto blocks = content_blocks(module, k);
    if (max_degree) {
        std::erase_if(blocks, [&](const auto& block) { return block.front().degree(module) > *max_degree; });
    }
    std::vector<std::size_t> ranks(blocks.size());
    parallel_for(blocks.size(), threads, [&](std::size_t i) {
        ranks[i] = rank_exact(operator_matrix(beta, module, blocks[i]));
    });
    GradedDims dims;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (ranks[i] > 0) dims[blocks[i].front().degree(module)] += ranks[i];
    }
    return dims;
}

GradedDims lie_dims_by_trace(const GradedModule& module, int k) {
    check_size(module, k);
    const GroupRingElement beta = build_beta(k);
    GradedDims dims;
    for (const auto& block : content_blocks(module, k)) {
        const Integer trace = operator_matrix(beta, module, block).trace();
        if (trace % k != 0) throw std::runtime_error("beta trace not divisible by k");
        if (trace != 0) dims[block.front().degree(module)] += trace / k;
    }
    return dims;
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

Integer witt_count(int ell, int k) {
    if (ell < 1 || k < 1) throw std::invalid_argument("witt_count needs l >= 1 and k >= 1");
    Integer sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d == 0) sum += mobius(d) * power(Integer(ell), static_cast<unsigned>(k / d));
    }
    return sum / k;
}

int pbw_default_max_len(const GradedModule& module, int order) {
    return std::max(1, order / module.min_degree());
}

PbwResult pbw_check(const GradedModule& module, int order, int max_len, unsigned threads) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    if (max_len > kMaxBetaArity) {
        throw std::invalid_argument("max_len " + std::to_string(max_len) + " exceeds the bracket-length guard of " +
                                    std::to_string(kMaxBetaArity) + "; lower the truncation order");
    }
    if (static_cast<long long>(max_len + 1) * module.min_degree() <= order) {
        throw std::invalid_argument("truncation is not exact: brackets of length " + std::to_string(max_len + 1) +
                                    " reach degree " + std::to_string((max_len + 1) * module.min_degree()) +
                                    " <= " + std::to_string(order) + "; raise max_len");
    }
    PbwResult result;
    result.order = order;
    result.max_len = max_len;
    result.tensor_series = series_T(module, order);

    PoincareSeries product = PoincareSeries::one(order);
    PoincareSeries higher = PoincareSeries::one(order);
    for (int i = 1; i <= max_len; ++i) {
        const PoincareSeries factor = series_S(lie_dims(module, i, order, threads), order);
        product = product * factor;
        if (i >= 2) higher = higher * factor;
    }
    result.product_series = product;
    result.difference = result.tensor_series - product;
    result.equal = result.difference.is_zero();
    if (module.parity() == ParityClass::all_odd) {
        result.odd_difference = result.tensor_series - series_Lambda(module, order) * higher;
        result.odd_equal = result.odd_difference->is_zero();
    }
    return result;
}

}  // namespace dsw
