#pragma once

// Run configuration: defaults <- key=value config file <- command-line flags.

#include "fsscoex/engine.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fsscoex {

enum class OutputFormat { Csv, Svg, Table };

std::string_view to_string(OutputFormat f);

/// Raised for any malformed, unknown or out-of-range configuration value.
/// `key()` names the offending field.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string key, const std::string& what)
        : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct RunConfig {
    Scenario scenario;
    /// Multi-series request; empty means a single series at scenario.emitter.count.
    std::vector<int> counts;
    double d_start_m = 1.0;
    double d_stop_m = 5000.0;
    double step_m = 1.0;
    PowerRatioDb threshold{0.0};
    /// Unset means the command's natural format (csv for sweep, table otherwise).
    std::optional<OutputFormat> format;
    /// Empty means standard output.
    std::string out;

    /// Counts to evaluate, in output order.
    std::vector<int> effective_counts() const;
};

using ConfigOverride = std::pair<std::string, std::string>;

/// Recognised keys, in canonical order.
std::span<const std::string_view> config_keys();

/// Parses `text` (one `key = value` per line, `#` comments), then applies
/// `flags` in order and validates the merged result.
RunConfig parse_config(std::string_view text, std::span<const ConfigOverride> flags = {});

} // namespace fsscoex
