#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dsw/graded.hpp"
#include "dsw/group_ring.hpp"
#include "dsw/integer.hpp"

namespace dsw {

/// Largest row/column count operator_matrix will materialize.
inline constexpr std::size_t kMaxMatrixDimension = 8192;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Integer trace() const;

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Matrix of v -> apply(A, v) in the given basis: column j holds the image of
/// basis[j] expressed in the same basis. Throws if an image leaves the span
/// of `basis` or the basis exceeds kMaxMatrixDimension.
IntMatrix operator_matrix(const GroupRingElement& element, const GradedModule& module,
                          const std::vector<TensorWord>& basis);

/// Same, over every word of length k (lexicographic), optionally restricted
/// to a single homogeneous degree.
IntMatrix operator_matrix(const GroupRingElement& element, const GradedModule& module, int k,
                          std::optional<long long> degree_filter = {});

/// Rank over Q (fraction-free elimination) or, when `prime` is given, over Z/prime.
std::size_t rank_exact(const IntMatrix& matrix, std::optional<unsigned> prime = {});

/// Words of length k grouped by content (the multiset of letters). The
/// symmetric group action preserves content, so every group ring operator is
/// block diagonal with respect to this partition. Blocks are ordered by the
/// lexicographically smallest word; words within a block are lexicographic.
std::vector<std::vector<TensorWord>> content_blocks(const GradedModule& module, int k,
                                                    std::optional<long long> degree_filter = {});

}  // namespace dsw
