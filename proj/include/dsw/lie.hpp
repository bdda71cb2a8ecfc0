#pragma once

#include <optional>

#include "dsw/graded.hpp"
#include "dsw/series.hpp"

namespace dsw {

/// Largest number of words lie_dims enumerates (l^k).
inline constexpr std::size_t kMaxLieWords = 1u << 20;

/// Dimensions of the length-k bracket submodule: the rank over Q of beta_k on
/// each homogeneous degree, computed block by block over letter contents.
/// Blocks above `max_degree` (when given) are skipped.
GradedDims lie_dims(const GradedModule& module, int k, std::optional<long long> max_degree = {},
                    unsigned threads = 1);

/// Same total, computed as trace(beta_k)/k on each content block. Only an
/// oracle: it relies on beta_k / k being idempotent over Q.
GradedDims lie_dims_by_trace(const GradedModule& module, int k);

/// Classical necklace count (1/k) sum_{d | k} mu(d) l^{k/d}.
Integer witt_count(int ell, int k);

int mobius(int n);

struct PbwResult {
    int order = 0;
    int max_len = 0;
    PoincareSeries tensor_series{0};
    PoincareSeries product_series{0};
    /// tensor_series - product_series.
    PoincareSeries difference{0};
    bool equal = false;
    /// Present for all-odd modules: T(V) against Lambda(V) * prod_{i>=2} S(L_i(V)).
    std::optional<PoincareSeries> odd_difference;
    std::optional<bool> odd_equal;
};

/// Smallest max_len that makes the truncation at `order` exact.
int pbw_default_max_len(const GradedModule& module, int order);

/// Compares T(V) with prod_{i<=max_len} S(L_i(V)) through degree `order`.
/// Throws std::invalid_argument when brackets longer than max_len could still
/// reach degree `order`.
PbwResult pbw_check(const GradedModule& module, int order, int max_len, unsigned threads = 1);

}  // namespace dsw
