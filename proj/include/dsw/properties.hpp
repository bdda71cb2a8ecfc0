#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsw/eigen.hpp"

namespace dsw {

struct VerifyOptions {
    /// Largest tensor length for the single-block lemmas; the rank-two
    /// lemmas run up to max_k + 1 blocks.
    int max_k = 6;
    /// Seeded random cases per randomized check.
    std::size_t random_cases = 100;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

struct CheckResult {
    std::string suite;
    std::string id;
    std::string title;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
};

/// permgroup, elements, graded, lemmas, constants, liepbw.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Checks that throw are
/// recorded as failures rather than propagated.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace dsw
