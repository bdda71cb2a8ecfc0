#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dsw/cache.hpp"
#include "dsw/eigen.hpp"
#include "dsw/elements.hpp"
#include "dsw/graded.hpp"
#include "dsw/lie.hpp"
#include "dsw/planner.hpp"
#include "dsw/properties.hpp"

namespace dsw::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for argument combinations CLI11 cannot express; mapped to kExitUsage.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
    bool json = false;
    unsigned threads = 0;
    std::string seed_text;
    std::string cache_path;
};

std::uint64_t parse_seed(const std::string& text) {
    if (text.empty()) return kDefaultSeed;
    try {
        std::size_t used = 0;
        const auto value = std::stoull(text, &used, 0);
        if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError("invalid seed '" + text + "' (decimal or 0x-prefixed hex expected)");
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

Json string_list(const std::vector<int>& values) {
    Json a = Json::array();
    for (int v : values) a.push_back(std::to_string(v));
    return a;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// elements / apply

struct NamedElement {
    std::string name;
    GroupRingElement element;
};

NamedElement builtin_element(const std::string& kind, const std::vector<int>& args) {
    const auto need = [&](std::size_t count) {
        if (args.size() != count) {
            throw UsageError(kind + " takes " + std::to_string(count) + " integer argument(s)");
        }
    };
    if (kind == "beta") {
        need(1);
        return {"beta_" + std::to_string(args[0]), build_beta(args[0])};
    }
    if (kind == "shat") {
        need(1);
        return {"shat_" + std::to_string(args[0]), build_shat(args[0])};
    }
    if (kind == "sbar") {
        need(1);
        return {"sbar_" + std::to_string(args[0]), build_sbar(args[0])};
    }
    if (kind == "that") {
        need(2);
        return {"that_" + std::to_string(args[0]) + "," + std::to_string(args[1]), build_that(args[0], args[1])};
    }
    if (kind == "tbar") {
        need(2);
        return {"tbar_" + std::to_string(args[0]) + "," + std::to_string(args[1]), build_tbar(args[0], args[1])};
    }
    if (kind == "one") {
        need(1);
        return {"one_" + std::to_string(args[0]), GroupRingElement::one(args[0])};
    }
    throw UsageError("unknown builtin element '" + kind + "'");
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

// "beta:5", "that:2,3", ... or a path to a text file of "<coeff> <a1,...,ak>" lines.
NamedElement resolve_element(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        if (kind == "beta" || kind == "shat" || kind == "sbar" || kind == "that" || kind == "tbar" || kind == "one") {
            return builtin_element(kind, parse_ints(spec.substr(colon + 1)));
        }
    }
    std::ifstream in(spec);
    if (!in) throw UsageError("element '" + spec + "' is neither a builtin (kind:args) nor a readable file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {spec, GroupRingElement::from_text(buffer.str())};
}

Json element_json(const NamedElement& e) {
    Json j;
    j["element"] = e.name;
    j["arity"] = std::to_string(e.element.arity());
    j["size"] = std::to_string(e.element.size());
    Json terms = Json::array();
    for (const auto& [sigma, c] : e.element.terms()) {
        terms.push_back(Json{{"permutation", sigma.to_string()}, {"coefficient", c.str()}});
    }
    j["terms"] = terms;
    return j;
}

constexpr std::size_t kTextPreviewTerms = 64;

template <typename Container, typename Line>
void print_terms(std::ostream& out, const Container& terms, bool dump, Line line) {
    std::size_t shown = 0;
    for (const auto& term : terms) {
        if (!dump && shown == kTextPreviewTerms) {
            out << "  ... " << (terms.size() - shown) << " more (use --dump)\n";
            break;
        }
        out << "  " << line(term) << '\n';
        ++shown;
    }
}

// ---------------------------------------------------------------------------
// plan / stable-range

struct SpecOptions {
    std::string degrees;
    int prime = 0;
    int depth = 3;
    int n = 1;
    int truncation = 20;
    std::string spec_file;
};

void add_spec_options(CLI::App* sub, SpecOptions& o) {
    auto* file = sub->add_option("--spec", o.spec_file, "JSON file {\"degrees\":[...],\"prime\":p,...}");
    auto* degrees = sub->add_option("--degrees", o.degrees, "generator degrees, e.g. 3,5");
    auto* prime = sub->add_option("--prime", o.prime, "odd prime p");
    auto* depth = sub->add_option("--depth", o.depth, "number of b_i / k_j entries")->capture_default_str();
    auto* n = sub->add_option("--n", o.n, "bracket-block parameter")->capture_default_str();
    auto* trunc = sub->add_option("--truncation", o.truncation, "series truncation degree")->capture_default_str();
    for (auto* opt : {degrees, prime, depth, n, trunc}) file->excludes(opt);
}

SpaceSpec resolve_spec(const SpecOptions& o) {
    SpaceSpec spec;
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw UsageError("cannot read spec file '" + o.spec_file + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError("spec file '" + o.spec_file + "' is not valid JSON: " + e.what());
        }
        spec = SpaceSpec::from_json(j);
    } else {
        if (o.degrees.empty() || o.prime == 0) throw UsageError("--degrees and --prime are required (or --spec FILE)");
        spec.degrees = parse_ints(o.degrees);
        spec.prime = o.prime;
        spec.depth = o.depth;
        spec.n = o.n;
        spec.truncation = o.truncation;
    }
    spec.validate();
    return spec;
}

std::string join_integers(const std::vector<Integer>& values) {
    std::string out;
    for (const auto& v : values) out += (out.empty() ? "" : ", ") + v.str();
    return "[" + out + "]";
}

void print_plan_text(std::ostream& out, const DecompositionReport& r) {
    std::string degrees;
    for (int d : r.spec.degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
    out << "degrees " << degrees << ", p = " << r.spec.prime << "\n\napplicability:\n";
    for (const auto& f : r.applicability.flags) {
        out << "  " << std::left << std::setw(26) << f.name << (f.applies ? "yes" : "no") << '\n';
        for (const auto& reason : f.reasons) out << "      " << reason << '\n';
    }
    out << "gates:\n";
    for (const auto& g : r.applicability.gates) {
        out << "  " << std::left << std::setw(26) << g.name << to_string(g.status) << "  " << g.detail << '\n';
    }
    out << "\nb     = " << join_integers(r.b) << "\nb_n   = " << join_integers(r.b_n) << '\n';
    std::vector<Integer> kp(r.k_plain.begin(), r.k_plain.end()), ko(r.k_odd_form.begin(), r.k_odd_form.end());
    out << "k     = " << join_integers(kp) << "\n2k+1  = " << join_integers(ko) << '\n';
    if (!r.factors.empty()) out << "\nfactors:\n";
    for (const auto& f : r.factors) {
        out << "  [" << f.theorem << "] " << f.label;
        if (!f.homology.empty()) out << "   H_* = " << f.homology;
        out << '\n';
        if (f.series) out << "      " << f.series->to_string() << '\n';
    }
    if (!r.residuals.empty()) out << "\nresiduals:\n";
    for (const auto& res : r.residuals) {
        out << "  [" << res.theorem << "] " << res.label << (res.nonnegative ? "" : "  (NEGATIVE COEFFICIENTS)")
            << "\n      " << res.series.to_string() << '\n';
    }
    if (r.splitting_identity) out << "\nsplitting identity: " << (*r.splitting_identity ? "holds" : "FAILS") << '\n';
    if (!r.stable_range.empty()) {
        out << "\nstable range:\n";
        for (const auto& row : r.stable_range) out << "  i=" << row.i << "  j <= " << row.j_max.str() << '\n';
    }
    for (const auto& w : r.warnings) out << "\nwarning: " << w << '\n';
}

// ---------------------------------------------------------------------------

std::string constant_symbol(const EigenReport& r) {
    return std::string(r.parity == Parity::even ? "c" : "d") + "_{" + std::to_string(r.n) + "," +
           std::to_string(r.ell) + "}";
}

std::string signed_text(const Integer& v) { return v > 0 ? "+" + v.str() : v.str(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric-group calculus: DSW elements, eigen-constants, Lie/PBW data, decomposition plans."};
    app.name("dsw");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kEngineVersion);

    GlobalOptions g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware concurrency)")->envname("DSW_THREADS");
    app.add_option("--seed", g.seed_text, "random seed, decimal or 0x-hex (default 0xD5D5)");
    app.add_option("--cache", g.cache_path, "JSON-lines constants cache (disabled when empty)")->envname("DSW_CACHE");

    // elements
    auto* elements = app.add_subcommand("elements", "expand a named group-ring element");
    std::optional<int> e_beta, e_shat, e_sbar;
    std::vector<int> e_that, e_tbar;
    bool e_dump = false;
    elements->add_option("--beta", e_beta, "beta_k");
    elements->add_option("--shat", e_shat, "signed symmetrizer of S_k");
    elements->add_option("--sbar", e_sbar, "plain symmetrizer of S_k");
    elements->add_option("--that", e_that, "signed switching sum t_{j,k}: J K")->expected(2);
    elements->add_option("--tbar", e_tbar, "plain switching sum t_{j,k}: J K")->expected(2);
    elements->add_flag("--dump", e_dump, "print every term in text mode");

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply an element to a tensor word");
    std::string a_element, a_degrees, a_word;
    bool a_dump = false;
    apply_cmd->add_option("--element", a_element, "builtin kind:args (beta:3, that:2,3, ...) or file")->required();
    apply_cmd->add_option("--degrees", a_degrees, "generator degrees, e.g. 1,3")->required();
    apply_cmd->add_option("--word", a_word, "letters (generator indices), e.g. 1,2,1")->required();
    apply_cmd->add_flag("--dump", a_dump, "print every term in text mode");

    // constants
    auto* constants = app.add_subcommand("constants", "compute c_{n,l} / d_{n,l}");
    int c_n = 1, c_ell = 2, c_max_n = 2, c_max_ell = 3;
    std::string c_parity = "even", c_degrees;
    std::size_t c_sample = 0;
    bool c_scan = false;
    constants->add_option("--n", c_n, "number of blocks")->capture_default_str();
    constants->add_option("--ell", c_ell, "block length (rank of V)")->capture_default_str();
    constants->add_option("--parity", c_parity, "even (c) or odd (d)")->capture_default_str();
    constants->add_option("--sample", c_sample, "extra random test words")->capture_default_str();
    constants->add_option("--degrees", c_degrees, "override the degree assignment");
    constants->add_flag("--scan", c_scan, "tabulate against (l+1)^n ((l-1)!)^n");
    constants->add_option("--max-n", c_max_n, "scan bound on n")->capture_default_str();
    constants->add_option("--max-ell", c_max_ell, "scan bound on l")->capture_default_str();

    // liedims
    auto* liedims = app.add_subcommand("liedims", "graded dimensions of L_k(V)");
    std::string l_degrees;
    int l_max_len = 6;
    std::optional<long long> l_max_degree;
    liedims->add_option("--degrees", l_degrees, "generator degrees")->required();
    liedims->add_option("--max-len", l_max_len, "largest bracket length k")->capture_default_str();
    liedims->add_option("--max-degree", l_max_degree, "skip degrees above this");

    // pbw-check
    auto* pbw = app.add_subcommand("pbw-check", "compare T(V) with the product of S(L_i(V))");
    std::string p_degrees;
    int p_order = 20;
    std::optional<int> p_max_len;
    pbw->add_option("--degrees", p_degrees, "generator degrees")->required();
    pbw->add_option("--N", p_order, "truncation degree")->capture_default_str();
    pbw->add_option("--max-len", p_max_len, "largest bracket length (default: N / min degree)");

    // plan / stable-range
    auto* plan_cmd = app.add_subcommand("plan", "decomposition plan for a space specification");
    SpecOptions plan_opts;
    add_spec_options(plan_cmd, plan_opts);
    auto* stable = app.add_subcommand("stable-range", "stable-range table j <= b_i + 2m");
    SpecOptions stable_opts;
    add_spec_options(stable, stable_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suites and print a ledger");
    std::string v_suite = "all";
    int v_max_k = 6;
    std::size_t v_random = 100;
    verify->add_option("--suite", v_suite, "all or one suite name")->capture_default_str();
    verify->add_option("--max-k", v_max_k, "largest k for the single-block checks")->capture_default_str();
    verify->add_option("--random", v_random, "random cases per randomized check")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const unsigned threads = resolve_threads(g.threads);
        const std::uint64_t seed = parse_seed(g.seed_text);
        std::optional<ConstantCache> cache;
        if (!g.cache_path.empty()) cache.emplace(g.cache_path);

        if (elements->parsed()) {
            std::vector<NamedElement> picked;
            if (e_beta) picked.push_back(builtin_element("beta", {*e_beta}));
            if (e_shat) picked.push_back(builtin_element("shat", {*e_shat}));
            if (e_sbar) picked.push_back(builtin_element("sbar", {*e_sbar}));
            if (!e_that.empty()) picked.push_back(builtin_element("that", e_that));
            if (!e_tbar.empty()) picked.push_back(builtin_element("tbar", e_tbar));
            if (picked.size() != 1) throw UsageError("elements: give exactly one of --beta --shat --sbar --that --tbar");
            const auto& e = picked.front();
            if (g.json) {
                print_json(out, element_json(e));
            } else {
                out << e.name << " in Z[S_" << e.element.arity() << "]: " << e.element.size() << " terms\n";
                print_terms(out, e.element.terms(), e_dump,
                            [](const auto& t) { return t.second.str() + " (" + t.first.to_string() + ")"; });
            }
            return kExitOk;
        }

        if (apply_cmd->parsed()) {
            const auto e = resolve_element(a_element);
            const GradedModule module = GradedModule::parse(a_degrees);
            const TensorWord word = TensorWord::parse(a_word);
            const auto result = apply(e.element, TensorVector::from_word(module, word));
            if (g.json) {
                Json j;
                j["element"] = e.name;
                j["degrees"] = string_list(module.degrees());
                j["word"] = word.to_string();
                j["size"] = std::to_string(result.size());
                Json terms = Json::array();
                for (const auto& [w, c] : result.terms()) {
                    terms.push_back(Json{{"word", w.to_string()}, {"coefficient", c.str()}});
                }
                j["terms"] = terms;
                print_json(out, j);
            } else {
                out << e.name << " applied to (" << word.to_string() << "): " << result.size() << " terms\n";
                print_terms(out, result.terms(), a_dump,
                            [](const auto& t) { return t.second.str() + " (" + t.first.to_string() + ")"; });
            }
            return kExitOk;
        }

        if (constants->parsed()) {
            if (c_scan) {
                const auto rows = conjecture_scan(c_max_n, c_max_ell, threads);
                if (g.json) {
                    Json a = Json::array();
                    for (const auto& r : rows) {
                        a.push_back(Json{{"n", std::to_string(r.n)},
                                         {"ell", std::to_string(r.ell)},
                                         {"c", r.c.str()},
                                         {"d", r.d.str()},
                                         {"conjectured", r.conjectured.str()},
                                         {"match", r.match}});
                    }
                    print_json(out, Json{{"rows", a}});
                } else {
                    out << std::right << std::setw(3) << "n" << std::setw(5) << "l" << std::setw(14) << "c"
                        << std::setw(14) << "d" << std::setw(14) << "conjectured" << "  match\n";
                    for (const auto& r : rows) {
                        out << std::setw(3) << r.n << std::setw(5) << r.ell << std::setw(14) << r.c.str()
                            << std::setw(14) << r.d.str() << std::setw(14) << r.conjectured.str() << "  " << r.match
                            << '\n';
                    }
                }
                return kExitOk;
            }
            const Parity parity = parse_parity(c_parity);
            EigenOptions options;
            options.sample = c_sample;
            options.seed = seed;
            options.threads = threads;
            if (!c_degrees.empty()) options.degrees = parse_ints(c_degrees);
            // Only the canonical configuration is cached, so a cached report
            // is byte-for-byte what a fresh computation would print.
            const bool cacheable = cache && c_sample == 0 && !options.degrees;
            std::optional<EigenReport> report;
            if (cacheable) {
                std::vector<std::string> warnings;
                report = cache->lookup(c_n, c_ell, parity, &warnings);
                for (const auto& w : warnings) err << "warning: " << w << '\n';
                if (report && report->seed != seed) report.reset();
            }
            if (!report) {
                report = compute_constant(c_n, c_ell, parity, options);
                if (cacheable) cache->store(*report);
            }
            if (g.json) {
                print_json(out, report_to_json(*report));
            } else {
                out << constant_symbol(*report) << " = " << signed_text(report->signed_value) << "  (|value| "
                    << report->magnitude.str() << ", " << report->vectors_tested << " test vectors, "
                    << (report->consistent ? "consistent" : "INCONSISTENT") << ")\n";
                out << "prime to:";
                for (int q : report->prime_to) out << ' ' << q;
                out << '\n';
            }
            return kExitOk;
        }

        if (liedims->parsed()) {
            const GradedModule module = GradedModule::parse(l_degrees);
            if (l_max_len < 1) throw UsageError("--max-len must be >= 1");
            Json lengths = Json::array();
            for (int k = 1; k <= l_max_len; ++k) {
                const auto dims = lie_dims(module, k, l_max_degree, threads);
                Integer total = 0;
                Json by_degree = Json::object();
                for (const auto& [d, c] : dims) {
                    by_degree[std::to_string(d)] = c.str();
                    total += c;
                }
                if (g.json) {
                    lengths.push_back(Json{{"k", std::to_string(k)}, {"dims", by_degree}, {"total", total.str()}});
                } else {
                    out << "L_" << k << ": total " << total.str();
                    for (const auto& [d, c] : dims) out << "  t^" << d << ":" << c.str();
                    out << '\n';
                }
            }
            if (g.json) print_json(out, Json{{"degrees", string_list(module.degrees())}, {"lengths", lengths}});
            return kExitOk;
        }

        if (pbw->parsed()) {
            const GradedModule module = GradedModule::parse(p_degrees);
            const int max_len = p_max_len.value_or(pbw_default_max_len(module, p_order));
            const auto r = pbw_check(module, p_order, max_len, threads);
            const bool ok = r.equal && r.odd_equal.value_or(true);
            if (g.json) {
                Json j;
                j["degrees"] = string_list(module.degrees());
                j["order"] = std::to_string(r.order);
                j["max_len"] = std::to_string(r.max_len);
                j["equal"] = r.equal;
                j["tensor_series"] = to_json(r.tensor_series);
                j["product_series"] = to_json(r.product_series);
                j["difference"] = to_json(r.difference);
                if (r.odd_equal) {
                    j["odd_equal"] = *r.odd_equal;
                    j["odd_difference"] = to_json(*r.odd_difference);
                }
                print_json(out, j);
            } else {
                out << "T(V)            = " << r.tensor_series.to_string() << '\n';
                out << "prod S(L_i(V))  = " << r.product_series.to_string() << '\n';
                out << "through degree " << r.order << " with brackets up to length " << r.max_len << ": "
                    << (r.equal ? "equal" : "DIFFERENT") << '\n';
                if (r.odd_equal) {
                    out << "T(V) = Lambda(V) * prod_{i>=2} S(L_i(V)): " << (*r.odd_equal ? "equal" : "DIFFERENT")
                        << '\n';
                }
            }
            return ok ? kExitOk : kExitFailure;
        }

        if (plan_cmd->parsed()) {
            const SpaceSpec spec = resolve_spec(plan_opts);
            PlannerOptions options;
            options.cache = cache ? &*cache : nullptr;
            options.threads = threads;
            const auto report = plan(spec, options);
            if (g.json) {
                print_json(out, to_json(report));
            } else {
                print_plan_text(out, report);
            }
            return kExitOk;
        }

        if (stable->parsed()) {
            const SpaceSpec spec = resolve_spec(stable_opts);
            const auto rows = stable_range(spec);
            if (g.json) {
                Json a = Json::array();
                for (const auto& r : rows) a.push_back(Json{{"i", std::to_string(r.i)}, {"j_max", r.j_max.str()}});
                print_json(out, Json{{"degrees", string_list(spec.degrees)}, {"prime", std::to_string(spec.prime)},
                                     {"rows", a}});
            } else {
                for (const auto& r : rows) out << "i=" << r.i << "  j <= " << r.j_max.str() << '\n';
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            VerifyOptions options;
            options.max_k = v_max_k;
            options.random_cases = v_random;
            options.seed = seed;
            options.threads = threads;
            const auto results = run_suite(v_suite, options);
            const auto failed = static_cast<std::size_t>(
                std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; }));
            if (g.json) {
                Json a = Json::array();
                for (const auto& r : results) {
                    a.push_back(Json{{"suite", r.suite},
                                     {"id", r.id},
                                     {"title", r.title},
                                     {"passed", r.passed},
                                     {"cases", std::to_string(r.cases)},
                                     {"detail", r.detail}});
                }
                print_json(out, Json{{"seed", std::to_string(seed)},
                                     {"max_k", std::to_string(v_max_k)},
                                     {"random_cases", std::to_string(v_random)},
                                     {"checks", std::to_string(results.size())},
                                     {"failed", std::to_string(failed)},
                                     {"results", a}});
            } else {
                for (const auto& r : results) {
                    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << (r.suite + "/" + r.id)
                        << std::right << std::setw(7) << r.cases << "  " << r.title << '\n';
                    if (!r.detail.empty()) out << "        " << r.detail << '\n';
                }
                out << results.size() << " checks, " << failed << " failed\n";
            }
            return failed == 0 ? kExitOk : kExitFailure;
        }
    } catch (const std::invalid_argument& e) {
        err << "dsw: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "dsw: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace dsw::cli
