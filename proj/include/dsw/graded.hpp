#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsw/group_ring.hpp"
#include "dsw/integer.hpp"

namespace dsw {

/// Longest tensor word the engine handles (letters are packed 4 bits each).
inline constexpr int kMaxTensorLength = 16;
/// Largest number of generators of a graded module.
inline constexpr int kMaxGenerators = 15;

enum class ParityClass { all_even, all_odd, mixed };

std::string to_string(ParityClass parity);

/// A free graded module described by the degrees of its generators.
class GradedModule {
public:
    /// Throws std::invalid_argument for an empty list, a degree < 1, or more
    /// than kMaxGenerators generators.
    explicit GradedModule(std::vector<int> degrees);

    /// Parses "2,4,6".
    static GradedModule parse(std::string_view text);

    int rank() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    /// Degree of generator g, 1-based.
    int degree(int generator) const { return degrees_.at(static_cast<std::size_t>(generator - 1)); }
    bool is_odd(int generator) const { return degree(generator) % 2 != 0; }
    long long total_degree() const;
    int min_degree() const;
    ParityClass parity() const { return parity_; }

    bool operator==(const GradedModule& other) const { return degrees_ == other.degrees_; }

private:
    std::vector<int> degrees_;
    ParityClass parity_;
};

/// A basis tensor of V^{(x)k}: a sequence of generator indices.
class TensorWord {
public:
    TensorWord() = default;
    explicit TensorWord(std::span<const int> letters);
    TensorWord(std::initializer_list<int> letters);

    static TensorWord from_code(std::uint64_t code, int length);
    /// Parses "1,2,1".
    static TensorWord parse(std::string_view text);

    int length() const { return length_; }
    /// Letter at position pos, 1-based.
    int letter(int pos) const { return static_cast<int>((code_ >> (4 * (length_ - pos))) & 0xF); }
    std::vector<int> letters() const;
    std::uint64_t code() const { return code_; }

    long long degree(const GradedModule& module) const;
    /// Throws if a letter exceeds the module rank.
    void check_against(const GradedModule& module) const;

    std::string to_string() const;

    /// Shorter words first, then lexicographic by letters.
    std::strong_ordering operator<=>(const TensorWord& other) const;
    bool operator==(const TensorWord& other) const = default;

private:
    std::uint64_t code_ = 0;
    int length_ = 0;
};

/// A finite integer combination of tensor words of a fixed length.
class TensorVector {
public:
    using Term = std::pair<TensorWord, Integer>;

    TensorVector(GradedModule module, int length);

    static TensorVector from_word(const GradedModule& module, const TensorWord& word, const Integer& c = 1);

    /// Builds from unsorted terms; merges duplicates and drops zeros.
    static TensorVector from_terms(const GradedModule& module, int length, std::vector<Term> terms);

    const GradedModule& module() const { return module_; }
    int length() const { return length_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(const TensorWord& word) const;

    /// Canonical text: one "<coeff> i1,i2,...,ik" line per term, words sorted.
    std::string to_text() const;

    /// If *this == e * base for an integer e, returns e. `base` must be nonzero.
    std::optional<Integer> ratio_to(const TensorVector& base) const;

    bool operator==(const TensorVector& other) const;

private:
    GradedModule module_;
    int length_;
    std::vector<Term> terms_;
};

TensorVector operator+(const TensorVector& a, const TensorVector& b);
TensorVector operator-(const TensorVector& a, const TensorVector& b);
TensorVector operator*(const Integer& c, const TensorVector& v);

/// Concatenation a (x) b.
TensorVector tensor_product(const TensorVector& a, const TensorVector& b);

/// Graded right action of a permutation on a basis word: the result word has
/// letter w[sigma(i)] at position i, and the sign collects (-1)^{|a||b|} over
/// every pair of letters whose relative order is reversed.
std::pair<TensorWord, int> act(const Permutation& sigma, const TensorWord& word, const GradedModule& module);

/// Linear extension of act to group ring elements and tensor vectors.
/// apply(A*B, v) == apply(B, apply(A, v)).
TensorVector apply(const GroupRingElement& element, const TensorVector& vector);

/// Every word of length k over the module's generators, in lexicographic order,
/// optionally only those of total degree `degree`.
std::vector<TensorWord> basis_words(const GradedModule& module, int k, std::optional<long long> degree = {});

}  // namespace dsw
