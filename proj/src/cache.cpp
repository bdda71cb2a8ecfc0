#include "dsw/cache.hpp"

#include <fstream>
#include <mutex>
#include <stdexcept>

namespace dsw {

namespace {

std::string str(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Integer integer_field(const nlohmann::json& j, const char* key) {
    auto value = parse_integer(str(j, key));
    if (!value) throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
    return *value;
}

int int_field(const nlohmann::json& j, const char* key) {
    const auto value = to_int64(integer_field(j, key));
    if (!value || *value < INT32_MIN || *value > INT32_MAX) {
        throw std::invalid_argument(std::string("field '") + key + "' out of range");
    }
    return static_cast<int>(*value);
}

}  // namespace

nlohmann::ordered_json report_to_json(const EigenReport& report) {
    nlohmann::ordered_json j;
    j["n"] = std::to_string(report.n);
    j["ell"] = std::to_string(report.ell);
    j["parity"] = to_string(report.parity);
    j["constant"] = report.parity == Parity::even ? "c" : "d";
    j["signed_value"] = report.signed_value.str();
    j["magnitude"] = report.magnitude.str();
    j["vectors_tested"] = std::to_string(report.vectors_tested);
    j["consistent"] = report.consistent;
    auto assignments = nlohmann::ordered_json::array();
    for (const auto& degrees : report.degree_assignments_tested) {
        auto list = nlohmann::ordered_json::array();
        for (int d : degrees) list.push_back(std::to_string(d));
        assignments.push_back(list);
    }
    j["degree_assignments_tested"] = assignments;
    auto primes = nlohmann::ordered_json::array();
    for (int q : report.prime_to) primes.push_back(std::to_string(q));
    j["prime_to"] = primes;
    j["seed"] = std::to_string(report.seed);
    return j;
}

EigenReport report_from_json(const nlohmann::json& j) {
    EigenReport r;
    r.n = int_field(j, "n");
    r.ell = int_field(j, "ell");
    r.parity = parse_parity(str(j, "parity"));
    r.signed_value = integer_field(j, "signed_value");
    r.magnitude = integer_field(j, "magnitude");
    if (r.magnitude != abs(r.signed_value)) throw std::invalid_argument("magnitude does not match signed_value");
    r.vectors_tested = static_cast<std::size_t>(int_field(j, "vectors_tested"));
    r.consistent = j.at("consistent").get<bool>();
    for (const auto& list : j.at("degree_assignments_tested")) {
        std::vector<int> degrees;
        for (const auto& d : list) {
            const auto v = parse_integer(d.get<std::string>());
            if (!v) throw std::invalid_argument("bad degree entry");
            degrees.push_back(static_cast<int>(*to_int64(*v)));
        }
        r.degree_assignments_tested.push_back(std::move(degrees));
    }
    for (const auto& q : j.at("prime_to")) {
        const auto v = parse_integer(q.get<std::string>());
        if (!v) throw std::invalid_argument("bad prime entry");
        r.prime_to.push_back(static_cast<int>(*to_int64(*v)));
    }
    const auto seed = parse_integer(str(j, "seed"));
    if (!seed || *seed < 0) throw std::invalid_argument("bad seed");
    r.seed = static_cast<std::uint64_t>(*seed);
    return r;
}

ConstantCache::ConstantCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<EigenReport> ConstantCache::lookup(int n, int ell, Parity parity,
                                                 std::vector<std::string>* warnings) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<EigenReport> found;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            if (str(j, "engine_version") != kEngineVersion) continue;
            EigenReport r = report_from_json(j);
            if (r.n == n && r.ell == ell && r.parity == parity) found = std::move(r);
        } catch (const std::exception& e) {
            if (warnings) {
                warnings->push_back("cache " + path_.string() + ":" + std::to_string(line_number) +
                                    ": skipped corrupt line (" + e.what() + ")");
            }
        }
    }
    return found;
}

void ConstantCache::store(const EigenReport& report) const {
    static std::mutex mutex;
    auto j = report_to_json(report);
    j["engine_version"] = kEngineVersion;
    std::lock_guard lock(mutex);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_.string() + " for appending");
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + path_.string());
}

}  // namespace dsw
