#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace malab {

/// Usage or configuration problem; maps to process exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Calibration could not reach its targets; maps to process exit code 2.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key=value configuration: a text file ('#' comments, blank lines
/// allowed) overlaid with repeatable --set pairs. Typo protection is strict —
/// keys outside the command's schema are hard errors.
class KeyValueConfig {
  public:
    /// Parses `key = value` lines. Later assignments win.
    static KeyValueConfig from_file(const std::string& path);

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    /// Applies a "key=value" pair as given on the command line.
    void apply_set_arg(const std::string& arg);

    /// Merges `other` on top of this configuration.
    void merge(const KeyValueConfig& other) {
        for (const auto& [k, v] : other.values_)
            values_[k] = v;
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    /// Throws ConfigError listing every key outside `allowed`.
    void require_known(const std::set<std::string>& allowed) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::int64_t get_i64(const std::string& key, std::int64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<std::uint64_t> get_u64_list(const std::string& key) const;

    const std::map<std::string, std::string>& values() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

} // namespace malab
