#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace polarprior {

inline constexpr const char* kVersion = "1.0.0";

/// Validated run configuration. `doc` holds the effective document with
/// every default filled in.
struct RunConfig {
    std::string command;
    nlohmann::json doc;

    /// Sorted-key, two-space-indented rendering of `doc`; parsing it again
    /// yields the same normal form byte for byte.
    std::string normal_form() const;
    /// FNV-1a 64-bit hash of the normal form, as 16 hex digits.
    std::string hash() const;
};

const std::vector<std::string>& command_names();

/// Parses JSON text (ParseError with line and column on syntax errors), applies
/// "dotted.key=value" overrides, then validates. Every unknown key and
/// out-of-range value is collected into one ValidationError.
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});
RunConfig validate_config(nlohmann::json doc);

}  // namespace polarprior
