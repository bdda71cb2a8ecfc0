#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsw/graded.hpp"
#include "dsw/integer.hpp"

namespace dsw {

enum class Parity { even, odd };

std::string to_string(Parity parity);
Parity parse_parity(const std::string& text);

/// Largest tensor length n*l+1 the constant engine accepts.
inline constexpr int kMaxSandwichLength = 13;
inline constexpr std::uint64_t kDefaultSeed = 0xD5D5;
inline constexpr int kSmallPrimes[] = {3, 5, 7, 11, 13};

struct EigenReport {
    int n = 0;
    int ell = 0;
    Parity parity = Parity::even;
    Integer signed_value;
    Integer magnitude;
    std::size_t vectors_tested = 0;
    bool consistent = false;
    std::vector<std::vector<int>> degree_assignments_tested;
    std::vector<int> prime_to;
    std::uint64_t seed = kDefaultSeed;
};

/// Degrees 2,4,...,2l (even) or 1,3,...,2l-1 (odd).
std::vector<int> default_degrees(int ell, Parity parity);
/// Constant degrees 2,...,2 (even) or 3,...,3 (odd).
std::vector<int> alternate_degrees(int ell, Parity parity);

/// The symmetrizer s^{(x)n} (x) 1 applied to v, where s is the signed sum
/// for even parity and the plain sum for odd parity.
TensorVector apply_block_symmetrizer(const TensorVector& v, int n, int ell, Parity parity);

/// beta_length acting on letters offset+1 .. offset+length of v (the whole
/// tensor by default), evaluated as a chain of two-term factors. Equal to
/// applying the corresponding embedding of build_beta(length).
TensorVector apply_beta_chain(const TensorVector& v, int offset = 0, int length = -1);

struct EigenOptions {
    std::size_t sample = 0;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::vector<int>> degrees;
    unsigned threads = 1;
};

/// Computes the scalar e with S(beta(S(x))) = e * S(x) on the spanning vectors
/// y^{(x)n} (x) v_i and `sample` random words with nonzero image. Throws
/// std::runtime_error when proportionality fails or the scalar differs between
/// vectors, std::invalid_argument for bad input or a length above the guard.
EigenReport compute_constant(int n, int ell, Parity parity, const EigenOptions& options = {});

Integer closed_form_c1(int ell);
Integer closed_form_cn2(int n);
Integer conjectured_value(int n, int ell);

struct ScanRow {
    int n = 0;
    int ell = 0;
    Integer c;
    Integer d;
    Integer conjectured;
    /// "both", "c", "d" or "none".
    std::string match;
};

std::vector<ScanRow> conjecture_scan(int max_n, int max_ell, unsigned threads = 1);

}  // namespace dsw
