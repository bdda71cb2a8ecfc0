#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dsw {

/// A permutation of {1..k} in one-line notation: images()[i-1] is the image of i.
class Permutation {
public:
    /// Throws std::invalid_argument unless `images` is a bijection of {1..k}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int arity);

    /// Parses "a1,a2,...,ak" (surrounding parentheses allowed).
    static Permutation parse(std::string_view text);

    int arity() const { return static_cast<int>(images_.size()); }

    /// Image of i, 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return images_; }

    /// +1 or -1 according to the parity of the inversion count.
    int sign() const;

    Permutation inverse() const;

    bool is_identity() const;

    /// "a1,a2,...,ak"
    std::string to_string() const;

    // Lexicographic on one-line notation.
    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Function composition: result(i) = sigma(tau(i)). Throws on arity mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// All k! permutations of {1..k} in lexicographic order.
std::vector<Permutation> all_permutations(int arity);

}  // namespace dsw
