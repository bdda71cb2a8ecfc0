#include "dsw/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace dsw {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Integer IntMatrix::trace() const {
    Integer sum = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += at(i, i);
    return sum;
}

IntMatrix operator_matrix(const GroupRingElement& element, const GradedModule& module,
                          const std::vector<TensorWord>& basis) {
    if (basis.size() > kMaxMatrixDimension) {
        throw std::length_error("operator matrix of dimension " + std::to_string(basis.size()) +
                                " exceeds the guard of " + std::to_string(kMaxMatrixDimension));
    }
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].code(), i);

    IntMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const TensorVector image = apply(element, TensorVector::from_word(module, basis[j]));
        for (const auto& [word, c] : image.terms()) {
            const auto it = index.find(word.code());
            if (it == index.end()) {
                throw std::invalid_argument("operator image of " + basis[j].to_string() +
                                            " leaves the span of the chosen basis");
            }
            m.at(it->second, j) = c;
        }
    }
    return m;
}

IntMatrix operator_matrix(const GroupRingElement& element, const GradedModule& module, int k,
                          std::optional<long long> degree_filter) {
    if (element.arity() != k) throw std::invalid_argument("operator_matrix: arity does not match k");
    double count = 1;
    for (int i = 0; i < k; ++i) count *= module.rank();
    if (!degree_filter && count > static_cast<double>(kMaxMatrixDimension)) {
        throw std::length_error("operator matrix on " + std::to_string(static_cast<long long>(count)) +
                                " words exceeds the guard of " + std::to_string(kMaxMatrixDimension));
    }
    return operator_matrix(element, module, basis_words(module, k, degree_filter));
}

namespace {

std::size_t rank_rational(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m.at(r, c) != 0 && (pivot == rows || abs(m.at(r, c)) < abs(m.at(pivot, c)))) pivot = r;
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        }
        const Integer p = m.at(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Integer a = m.at(r, c);
            if (a == 0) continue;
            const Integer g = gcd(p, a);
            const Integer fp = p / g, fa = a / g;
            Integer content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                Integer& x = m.at(r, j);
                x = fp * x - fa * m.at(rank, j);
                if (x != 0) content = gcd(content, x);
            }
            // Keeping rows primitive stops coefficient growth.
            if (content > 1) {
                for (std::size_t j = c; j < cols; ++j) m.at(r, j) /= content;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_modular(const IntMatrix& source, unsigned prime) {
    if (prime < 2) throw std::invalid_argument("rank modulus must be at least 2");
    const std::size_t rows = source.rows(), cols = source.cols();
    const auto q = static_cast<std::int64_t>(prime);
    std::vector<std::int64_t> m(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Integer x = source.at(r, c) % prime;
            if (x < 0) x += prime;
            m[r * cols + c] = static_cast<std::int64_t>(x);
        }
    }
    auto inverse = [q](std::int64_t a) {
        std::int64_t result = 1, base = a % q;
        for (std::int64_t e = q - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % q;
            base = base * base % q;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
        }
        const std::int64_t inv = inverse(m[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t f = m[r * cols + c] * inv % q;
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                m[r * cols + j] = ((m[r * cols + j] - f * m[rank * cols + j]) % q + q) % q;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& matrix, std::optional<unsigned> prime) {
    return prime ? rank_modular(matrix, *prime) : rank_rational(matrix);
}

std::vector<std::vector<TensorWord>> content_blocks(const GradedModule& module, int k,
                                                    std::optional<long long> degree_filter) {
    std::map<std::vector<int>, std::vector<TensorWord>> by_content;
    std::vector<std::vector<int>> order;
    for (const TensorWord& w : basis_words(module, k, degree_filter)) {
        std::vector<int> key = w.letters();
        std::sort(key.begin(), key.end());
        auto [it, inserted] = by_content.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(w);
    }
    std::vector<std::vector<TensorWord>> out;
    out.reserve(order.size());
    for (const auto& key : order) out.push_back(std::move(by_content[key]));
    return out;
}

}  // namespace dsw
