#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsw/eigen.hpp"

namespace dsw {

/// Bumped whenever a change could alter computed constants; cache entries
/// stamped with another version are ignored.
inline constexpr const char* kEngineVersion = "dsw-1.0.0";

/// Machine form of a report. Every number is a decimal string.
nlohmann::ordered_json report_to_json(const EigenReport& report);
/// Inverse of report_to_json; throws on malformed input.
EigenReport report_from_json(const nlohmann::json& j);

/// Append-only JSON-lines store of computed constants, keyed by (n, l, parity).
class ConstantCache {
public:
    explicit ConstantCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }

    /// Latest entry for the key with the current engine version. Corrupt lines
    /// are skipped and described in `warnings`. Never computes anything.
    std::optional<EigenReport> lookup(int n, int ell, Parity parity, std::vector<std::string>* warnings = nullptr) const;

    /// Appends one line. Throws std::runtime_error if the file cannot be written.
    void store(const EigenReport& report) const;

private:
    std::filesystem::path path_;
};

}  // namespace dsw
