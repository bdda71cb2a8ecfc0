#include "dsw/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "dsw/lie.hpp"

namespace dsw {

namespace {

int json_int(const nlohmann::json& v, const char* what) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
        const auto parsed = parse_integer(v.get<std::string>());
        if (parsed) {
            if (const auto small = to_int64(*parsed); small && *small >= INT32_MIN && *small <= INT32_MAX) {
                return static_cast<int>(*small);
            }
        }
    }
    throw std::invalid_argument(std::string("space spec: '") + what + "' must be an integer");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::string dim_text(int ell) { return "dim V = " + std::to_string(ell); }

// Shift of a degree list, clamped so absurdly large shifts stay representable:
// anything beyond the truncation order contributes nothing.
long long clamp_shift(const Integer& shift, int order) {
    return shift > order ? static_cast<long long>(order) + 1 : static_cast<long long>(*to_int64(shift));
}

}  // namespace

SpaceSpec SpaceSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("space spec must be a JSON object");
    SpaceSpec spec;
    if (!j.contains("degrees") || !j.at("degrees").is_array()) {
        throw std::invalid_argument("space spec needs a 'degrees' array");
    }
    for (const auto& d : j.at("degrees")) spec.degrees.push_back(json_int(d, "degrees"));
    if (!j.contains("prime")) throw std::invalid_argument("space spec needs 'prime'");
    spec.prime = json_int(j.at("prime"), "prime");
    if (j.contains("depth")) spec.depth = json_int(j.at("depth"), "depth");
    if (j.contains("n")) spec.n = json_int(j.at("n"), "n");
    if (j.contains("truncation")) spec.truncation = json_int(j.at("truncation"), "truncation");
    for (const auto& [key, value] : j.items()) {
        if (key != "degrees" && key != "prime" && key != "depth" && key != "n" && key != "truncation") {
            throw std::invalid_argument("space spec: unknown field '" + key + "'");
        }
    }
    spec.validate();
    return spec;
}

void SpaceSpec::validate() const {
    if (prime == 2) throw std::invalid_argument("the prime must be odd; p = 2 is not supported");
    if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not a prime");
    GradedModule check(degrees);
    if (depth < 0 || depth > 64) throw std::invalid_argument("depth must be in 0..64");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (truncation < 0 || truncation > 200) throw std::invalid_argument("truncation must be in 0..200");
}

std::string to_string(GateStatus status) {
    switch (status) {
        case GateStatus::pass: return "pass";
        case GateStatus::fail: return "fail";
        case GateStatus::unknown: return "unknown";
    }
    return "unknown";
}

const TheoremFlag& Applicability::flag(const std::string& name) const {
    for (const auto& f : flags) {
        if (f.name == name) return f;
    }
    throw std::out_of_range("no applicability flag named " + name);
}

namespace {

GcdGate constant_gate(const SpaceSpec& spec, const GradedModule& module, const PlannerOptions& options,
                      std::vector<std::string>& warnings) {
    GcdGate gate{"constant_prime_to_p", GateStatus::unknown, ""};
    const int ell = module.rank();
    const int n = spec.n;
    if (module.parity() == ParityClass::mixed) {
        gate.detail = "no eigen-constant is defined for mixed parity";
        return gate;
    }
    if (ell < 2) {
        gate.detail = "eigen-constants need dim V >= 2";
        return gate;
    }
    const Parity parity = module.parity() == ParityClass::all_even ? Parity::even : Parity::odd;
    const std::string name = std::string(parity == Parity::even ? "c" : "d") + "_{" + std::to_string(n) + "," +
                             std::to_string(ell) + "}";
    std::optional<Integer> value;
    std::string source;
    if (n == 1) {
        value = closed_form_c1(ell);
        source = "closed form";
    } else if (ell == 2) {
        value = closed_form_cn2(n);
        source = "closed form";
    } else if (options.cache) {
        if (auto hit = options.cache->lookup(n, ell, parity, &warnings)) {
            value = hit->magnitude;
            source = "cache";
        }
    }
    if (!value && options.compute_missing && n * ell + 1 <= kMaxSandwichLength) {
        EigenOptions eo;
        eo.threads = options.threads;
        const EigenReport report = compute_constant(n, ell, parity, eo);
        if (options.cache) options.cache->store(report);
        value = report.magnitude;
        source = "computed";
    }
    if (!value) {
        gate.detail = name + " is not cached and lies beyond the compute guard";
        return gate;
    }
    const Integer g = gcd(*value, Integer(spec.prime));
    gate.status = g == 1 ? GateStatus::pass : GateStatus::fail;
    gate.detail = name + " = " + value->str() + " (" + source + "), gcd with p = " + g.str();
    return gate;
}

}  // namespace

Applicability check_applicability(const SpaceSpec& spec, const PlannerOptions& options) {
    spec.validate();
    const GradedModule module(spec.degrees);
    const int ell = module.rank();
    const int p = spec.prime;
    const ParityClass parity = module.parity();
    const bool uniform = parity != ParityClass::mixed;
    const bool all_odd = parity == ParityClass::all_odd;

    Applicability out;
    if (!uniform) {
        out.warnings.push_back(
            "generators occur in both even and odd degrees; every decomposition here needs a single parity, "
            "and mixed-parity spaces generally cannot be split this way");
    }
    const std::string mixed_reason = "V has generators of both parities";
    const std::string gap_reason = "dim V = p-1 = " + std::to_string(p - 1) + " is the excluded gap case";

    auto finish = [](TheoremFlag flag, const std::string& ok) {
        flag.applies = flag.reasons.empty();
        if (flag.applies) flag.reasons.push_back(ok);
        return flag;
    };

    {
        TheoremFlag f{kSuspensionRetracts, false, {}};
        if (!uniform) f.reasons.push_back(mixed_reason);
        if (ell <= 1) f.reasons.push_back(dim_text(ell) + " must exceed 1");
        if (ell == p - 1) f.reasons.push_back(gap_reason);
        else if (ell > p - 1) f.reasons.push_back(dim_text(ell) + " must be below p-1 = " + std::to_string(p - 1));
        out.flags.push_back(finish(f, "uniform parity and 1 < " + dim_text(ell) + " < p-1"));
    }
    {
        TheoremFlag f{kHomologyRetractsRankP, false, {}};
        if (!uniform) f.reasons.push_back(mixed_reason);
        if (ell == p - 1) f.reasons.push_back(gap_reason);
        if (ell != p) f.reasons.push_back(dim_text(ell) + " must equal p = " + std::to_string(p));
        out.flags.push_back(finish(f, "uniform parity and " + dim_text(ell) + " = p"));
    }
    {
        TheoremFlag f{kRankTwoProduct, false, {}};
        if (!uniform) f.reasons.push_back(mixed_reason);
        if (p < 5) f.reasons.push_back("p = " + std::to_string(p) + " must be at least 5");
        if (ell != 2) f.reasons.push_back(dim_text(ell) + " must equal 2");
        out.flags.push_back(finish(f, "uniform parity, p >= 5 and dim V = 2"));
    }
    {
        TheoremFlag f{kExteriorSplitting, false, {}};
        if (!all_odd) f.reasons.push_back("V must be concentrated in odd degrees");
        if (ell == p - 1) f.reasons.push_back(gap_reason);
        else if (ell > p - 1) f.reasons.push_back(dim_text(ell) + " must be below p-1 = " + std::to_string(p - 1));
        out.flags.push_back(finish(f, "odd degrees only and 1 <= " + dim_text(ell) + " < p-1"));
    }
    {
        TheoremFlag f{kFiniteHSpaceProduct, false, {}};
        if (!all_odd) f.reasons.push_back("V must be concentrated in odd degrees");
        if (ell <= 1) f.reasons.push_back(dim_text(ell) + " must exceed 1");
        if (ell == p - 1) f.reasons.push_back(gap_reason);
        else if (ell > p - 1) f.reasons.push_back(dim_text(ell) + " must be below p-1 = " + std::to_string(p - 1));
        if (ell % 2 != 0) f.reasons.push_back(dim_text(ell) + " must be even");
        out.flags.push_back(finish(f, "odd degrees only, 1 < " + dim_text(ell) + " < p-1 and dim V even"));
    }

    const long long bracket = static_cast<long long>(spec.n) * ell + 1;
    GcdGate length_gate{"bracket_length_prime_to_p", bracket % p != 0 ? GateStatus::pass : GateStatus::fail,
                        "n*l+1 = " + std::to_string(bracket) + ", p = " + std::to_string(p)};
    out.gates.push_back(length_gate);
    out.gates.push_back(constant_gate(spec, module, options, out.warnings));
    {
        TheoremFlag f{kBracketBlockRetracts, false, {}};
        if (!uniform) f.reasons.push_back(mixed_reason);
        if (ell <= 1) f.reasons.push_back(dim_text(ell) + " must exceed 1");
        for (const auto& gate : out.gates) {
            if (gate.status != GateStatus::pass) f.reasons.push_back(gate.name + " is " + to_string(gate.status));
        }
        const std::string kind = ell <= p - 1 ? "dim V <= p-1: the suspensions themselves are retracts"
                                              : "dim V > p-1: retracts known through their homology";
        out.flags.push_back(finish(f, "uniform parity, gcd gates pass; " + kind));
    }
    return out;
}

std::vector<Integer> b_sequence(const SpaceSpec& spec) {
    const GradedModule module(spec.degrees);
    std::vector<Integer> b{0};
    for (int i = 1; i <= spec.depth; ++i) b.push_back((1 + module.rank()) * b.back() + module.total_degree());
    return b;
}

std::vector<Integer> b_n_sequence(const SpaceSpec& spec) {
    const GradedModule module(spec.degrees);
    const Integer factor = Integer(spec.n) * module.rank() + 1;
    const Integer step = Integer(spec.n) * module.total_degree();
    std::vector<Integer> b{0};
    for (int i = 1; i <= spec.depth; ++i) b.push_back(factor * b.back() + step);
    return b;
}

namespace {

template <typename Stop>
std::vector<long long> scan_k(int prime, KVariant variant, Stop&& stop) {
    if (prime < 2) throw std::invalid_argument("k_sequence: prime must be at least 2");
    std::vector<long long> kept;
    for (long long k = variant == KVariant::plain ? 2 : 1;; ++k) {
        const long long value = variant == KVariant::plain ? k : 2 * k + 1;
        if (stop(value, kept.size())) break;
        if (value % prime == 0) continue;
        if (std::any_of(kept.begin(), kept.end(), [&](long long q) { return value % q == 0; })) continue;
        kept.push_back(value);
    }
    return kept;
}

}  // namespace

std::vector<long long> k_sequence(int prime, long long bound, KVariant variant) {
    if (bound < 2) throw std::invalid_argument("k_sequence: bound must be at least 2");
    return scan_k(prime, variant, [bound](long long value, std::size_t) { return value > bound; });
}

std::vector<long long> first_k_values(int prime, std::size_t count, KVariant variant) {
    return scan_k(prime, variant, [count](long long, std::size_t kept) { return kept >= count; });
}

std::vector<StableRangeRow> stable_range(const SpaceSpec& spec) {
    const Applicability a = check_applicability(spec, PlannerOptions{nullptr, false, 1});
    const TheoremFlag& f = a.flag(kSuspensionRetracts);
    if (!f.applies) {
        std::string why;
        for (const auto& r : f.reasons) why += (why.empty() ? "" : "; ") + r;
        throw std::invalid_argument("stable range needs the suspension retracts: " + why);
    }
    const int m = GradedModule(spec.degrees).min_degree();
    const auto b = b_sequence(spec);
    std::vector<StableRangeRow> rows;
    for (int i = 1; i <= spec.depth; ++i) rows.push_back({i, b[static_cast<std::size_t>(i)] + 2 * m});
    return rows;
}

DecompositionReport plan(const SpaceSpec& spec, const PlannerOptions& options) {
    spec.validate();
    const GradedModule module(spec.degrees);
    const int order = spec.truncation;
    const auto power_label = [](const std::string& base, const Integer& exponent, const std::string& tail) {
        return base + "^" + exponent.str() + tail;
    };

    DecompositionReport r;
    r.spec = spec;
    r.applicability = check_applicability(spec, options);
    r.warnings = r.applicability.warnings;
    r.b = b_sequence(spec);
    r.b_n = b_n_sequence(spec);
    r.k_plain = first_k_values(spec.prime, static_cast<std::size_t>(spec.depth), KVariant::plain);
    r.k_odd_form = first_k_values(spec.prime, static_cast<std::size_t>(spec.depth), KVariant::odd_form);

    const PoincareSeries tensor = series_T(module, order);
    auto shifted_tensor = [&](const Integer& shift) {
        return series_T(module_dims(module, clamp_shift(shift, order)), order);
    };
    auto add_residual = [&](const std::string& theorem, const std::string& label, const PoincareSeries& divisor) {
        ResidualSeries res{theorem, label, divide(tensor, divisor), false};
        res.nonnegative = res.series.is_nonnegative();
        if (!res.nonnegative) r.warnings.push_back(theorem + ": residual series for " + label + " has a negative coefficient");
        r.residuals.push_back(std::move(res));
    };
    auto applies = [&](const char* name) { return r.applicability.flag(name).applies; };

    if (applies(kSuspensionRetracts)) {
        for (int i = 1; i <= spec.depth; ++i) {
            const Integer& b = r.b[static_cast<std::size_t>(i)];
            FactorDescriptor f{kSuspensionRetracts, power_label("Omega Sigma", b + 1, " X") + " retract",
                               power_label("T(Sigma", b, " V)"), shifted_tensor(b)};
            add_residual(kSuspensionRetracts, "complement of " + f.label, *f.series);
            r.factors.push_back(std::move(f));
        }
    }
    if (applies(kHomologyRetractsRankP)) {
        for (int i = 1; i <= spec.depth; ++i) {
            const Integer& b = r.b[static_cast<std::size_t>(i)];
            const std::string y = "Y_" + std::to_string(i);
            FactorDescriptor f{kHomologyRetractsRankP,
                               "Omega Sigma " + y + " retract (" + y + " has the homology of " +
                                   power_label("Sigma", b, " X") + ")",
                               power_label("T(Sigma", b, " V)"), shifted_tensor(b)};
            add_residual(kHomologyRetractsRankP, "complement of Omega Sigma " + y, *f.series);
            r.factors.push_back(std::move(f));
        }
    }
    if (applies(kRankTwoProduct)) {
        PoincareSeries product = PoincareSeries::one(order);
        for (long long q : r.k_odd_form) {
            const Integer shift = Integer((q - 1) / 2) * module.total_degree();
            FactorDescriptor f{kRankTwoProduct, power_label("Omega Sigma", shift + 1, " X"),
                               power_label("T(Sigma", shift, " V)"), shifted_tensor(shift)};
            product = product * *f.series;
            r.factors.push_back(std::move(f));
        }
        add_residual(kRankTwoProduct, "other factor", product);
    }
    if (applies(kExteriorSplitting)) {
        const PoincareSeries lambda = series_Lambda(module, order);
        PoincareSeries brackets = PoincareSeries::one(order);
        for (int i = 2; i <= pbw_default_max_len(module, order); ++i) {
            brackets = brackets * series_S(lie_dims(module, i, order, options.threads), order);
        }
        r.factors.push_back({kExteriorSplitting, "A(X), finite H-space", "Lambda(V)", lambda});
        r.factors.push_back({kExteriorSplitting, "Omega Q(X)", "S([L(V),L(V)])", brackets});
        r.splitting_identity = lambda * brackets == tensor;
        if (!*r.splitting_identity) r.warnings.push_back("exterior splitting series identity fails");
    }
    if (applies(kFiniteHSpaceProduct)) {
        PoincareSeries product = PoincareSeries::one(order);
        for (int i = 0; i <= spec.depth; ++i) {
            const Integer& b = r.b[static_cast<std::size_t>(i)];
            const PoincareSeries lambda = series_S(module_dims(module, clamp_shift(b, order)), order);
            product = product * lambda;
            r.factors.push_back({kFiniteHSpaceProduct, "A(" + power_label("Sigma", b, " X") + "), finite H-space",
                                 power_label("Lambda(Sigma", b, " V)"), lambda});
        }
        add_residual(kFiniteHSpaceProduct, "other factor", product);
    }
    if (applies(kBracketBlockRetracts)) {
        const bool direct = module.rank() <= spec.prime - 1;
        for (int i = 1; i <= spec.depth; ++i) {
            const Integer& b = r.b_n[static_cast<std::size_t>(i)];
            const std::string label =
                direct ? power_label("Omega Sigma", b + 1, " X") + " retract"
                       : "Omega Sigma Y_" + std::to_string(i) + " retract (Y_" + std::to_string(i) +
                             " has the homology of " + power_label("Sigma", b, " X") + ")";
            FactorDescriptor f{kBracketBlockRetracts, label, power_label("T(Sigma", b, " V)"), shifted_tensor(b)};
            add_residual(kBracketBlockRetracts, "complement of " + label, *f.series);
            r.factors.push_back(std::move(f));
        }
    }
    if (applies(kSuspensionRetracts)) r.stable_range = stable_range(spec);
    return r;
}

nlohmann::ordered_json to_json(const PoincareSeries& series) {
    nlohmann::ordered_json j;
    j["order"] = std::to_string(series.order());
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : series.coefficients()) coeffs.push_back(c.str());
    j["coefficients"] = coeffs;
    j["text"] = series.to_string();
    return j;
}

nlohmann::ordered_json to_json(const Applicability& a) {
    nlohmann::ordered_json j;
    auto flags = nlohmann::ordered_json::array();
    for (const auto& f : a.flags) flags.push_back({{"name", f.name}, {"applies", f.applies}, {"reasons", f.reasons}});
    j["flags"] = flags;
    auto gates = nlohmann::ordered_json::array();
    for (const auto& g : a.gates) {
        gates.push_back({{"name", g.name}, {"status", to_string(g.status)}, {"detail", g.detail}});
    }
    j["gates"] = gates;
    j["warnings"] = a.warnings;
    return j;
}

nlohmann::ordered_json to_json(const DecompositionReport& report) {
    const auto strings = [](const auto& values) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : values) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Integer>) arr.push_back(v.str());
            else arr.push_back(std::to_string(v));
        }
        return arr;
    };
    const GradedModule module(report.spec.degrees);
    nlohmann::ordered_json j;
    j["spec"] = {{"degrees", strings(report.spec.degrees)},
                 {"prime", std::to_string(report.spec.prime)},
                 {"depth", std::to_string(report.spec.depth)},
                 {"n", std::to_string(report.spec.n)},
                 {"truncation", std::to_string(report.spec.truncation)}};
    j["derived"] = {{"ell", std::to_string(module.rank())},
                    {"M", std::to_string(module.total_degree())},
                    {"m", std::to_string(module.min_degree())},
                    {"parity", to_string(module.parity())}};
    j["applicability"] = to_json(report.applicability);
    j["b_sequence"] = strings(report.b);
    j["b_n_sequence"] = strings(report.b_n);
    j["k_sequence"] = {{"plain", strings(report.k_plain)}, {"odd_form", strings(report.k_odd_form)}};
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : report.factors) {
        nlohmann::ordered_json fj{{"theorem", f.theorem}, {"label", f.label}, {"homology", f.homology}};
        fj["series"] = f.series ? to_json(*f.series) : nlohmann::ordered_json();
        factors.push_back(fj);
    }
    j["factors"] = factors;
    auto residuals = nlohmann::ordered_json::array();
    for (const auto& res : report.residuals) {
        residuals.push_back({{"theorem", res.theorem},
                             {"label", res.label},
                             {"nonnegative", res.nonnegative},
                             {"series", to_json(res.series)}});
    }
    j["residuals"] = residuals;
    j["splitting_identity"] =
        report.splitting_identity ? nlohmann::ordered_json(*report.splitting_identity) : nlohmann::ordered_json();
    auto range = nlohmann::ordered_json::array();
    for (const auto& row : report.stable_range) {
        range.push_back({{"i", std::to_string(row.i)}, {"j_max", row.j_max.str()}});
    }
    j["stable_range"] = range;
    j["warnings"] = report.warnings;
    return j;
}

}  // namespace dsw
