#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsw/cache.hpp"
#include "dsw/graded.hpp"
#include "dsw/series.hpp"

namespace dsw {

struct SpaceSpec {
    std::vector<int> degrees;
    int prime = 0;
    int depth = 3;
    /// Bracket-block parameter for the generalized b-sequence.
    int n = 1;
    /// Degree through which factor series are computed.
    int truncation = 20;

    /// Reads {"degrees":[...], "prime":p, "depth":d, "n":n, "truncation":N};
    /// numbers may be JSON numbers or decimal strings.
    static SpaceSpec from_json(const nlohmann::json& j);
    /// Throws std::invalid_argument unless p is an odd prime, degrees are
    /// valid and depth/n/truncation are in range.
    void validate() const;
};

// Names of the decompositions the planner knows about.
inline constexpr const char* kSuspensionRetracts = "suspension_retracts";
inline constexpr const char* kHomologyRetractsRankP = "homology_retracts_rank_p";
inline constexpr const char* kRankTwoProduct = "rank_two_product";
inline constexpr const char* kExteriorSplitting = "exterior_splitting";
inline constexpr const char* kFiniteHSpaceProduct = "finite_hspace_product";
inline constexpr const char* kBracketBlockRetracts = "bracket_block_retracts";

struct TheoremFlag {
    std::string name;
    bool applies = false;
    /// Why it applies, or every violated hypothesis.
    std::vector<std::string> reasons;
};

enum class GateStatus { pass, fail, unknown };
std::string to_string(GateStatus status);

struct GcdGate {
    std::string name;
    GateStatus status = GateStatus::unknown;
    std::string detail;
};

struct Applicability {
    std::vector<TheoremFlag> flags;
    std::vector<GcdGate> gates;
    std::vector<std::string> warnings;

    const TheoremFlag& flag(const std::string& name) const;
};

struct PlannerOptions {
    const ConstantCache* cache = nullptr;
    /// Compute uncached constants that fit the guard.
    bool compute_missing = true;
    unsigned threads = 1;
};

Applicability check_applicability(const SpaceSpec& spec, const PlannerOptions& options = {});

/// b_0 = 0, b_i = (1 + l) b_{i-1} + M, for i = 0..depth.
std::vector<Integer> b_sequence(const SpaceSpec& spec);
/// b_{0,n} = 0, b_{i,n} = (n l + 1) b_{i-1,n} + n M, for i = 0..depth.
std::vector<Integer> b_n_sequence(const SpaceSpec& spec);

enum class KVariant { plain, odd_form };

/// Greedy ascending scan up to `bound`: a candidate (k > 1 for plain, 2k+1
/// with k >= 1 for odd_form) is kept when it is prime to p and no earlier
/// kept value divides it. Returns the kept values (2k+1 itself for odd_form).
std::vector<long long> k_sequence(int prime, long long bound, KVariant variant);
/// The first `count` values of the same scan.
std::vector<long long> first_k_values(int prime, std::size_t count, KVariant variant);

struct FactorDescriptor {
    std::string theorem;
    std::string label;
    std::string homology;
    std::optional<PoincareSeries> series;
};

struct ResidualSeries {
    std::string theorem;
    std::string label;
    PoincareSeries series{0};
    bool nonnegative = false;
};

struct StableRangeRow {
    int i = 0;
    Integer j_max;
};

struct DecompositionReport {
    SpaceSpec spec;
    Applicability applicability;
    std::vector<Integer> b;
    std::vector<Integer> b_n;
    std::vector<long long> k_plain;
    std::vector<long long> k_odd_form;
    std::vector<FactorDescriptor> factors;
    std::vector<ResidualSeries> residuals;
    /// For exterior splitting: Lambda(V) * prod_{i>=2} S(L_i(V)) == T(V).
    std::optional<bool> splitting_identity;
    std::vector<StableRangeRow> stable_range;
    std::vector<std::string> warnings;
};

DecompositionReport plan(const SpaceSpec& spec, const PlannerOptions& options = {});

/// Rows (i, b_i + 2m) for i = 1..depth, m the smallest degree. Throws
/// std::invalid_argument naming the failed hypothesis when suspension
/// retracts do not apply.
std::vector<StableRangeRow> stable_range(const SpaceSpec& spec);

nlohmann::ordered_json to_json(const Applicability& a);
nlohmann::ordered_json to_json(const DecompositionReport& report);
nlohmann::ordered_json to_json(const PoincareSeries& series);

}  // namespace dsw
