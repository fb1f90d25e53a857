#include "malab/experiment/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace malab {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    KeyValueConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

void KeyValueConfig::apply_set_arg(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("--set expects KEY=VALUE, got: " + arg);
    values_[trim(arg.substr(0, eq))] = trim(arg.substr(eq + 1));
}

void KeyValueConfig::require_known(const std::set<std::string>& allowed) const {
    std::vector<std::string> bad;
    for (const auto& [k, _] : values_)
        if (!allowed.count(k))
            bad.push_back(k);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "unknown configuration key" << (bad.size() > 1 ? "s" : "") << ":";
        for (const auto& k : bad)
            os << " " << k;
        throw ConfigError(os.str());
    }
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::uint64_t KeyValueConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::uint64_t v = 0;
    const auto* first = it->second.data();
    const auto* last = first + it->second.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw ConfigError("key '" + key + "' expects an unsigned integer, got: " + it->second);
    return v;
}

std::int64_t KeyValueConfig::get_i64(const std::string& key, std::int64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::int64_t v = 0;
    const auto* first = it->second.data();
    const auto* last = first + it->second.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw ConfigError("key '" + key + "' expects an integer, got: " + it->second);
    return v;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects a number, got: " + it->second);
    }
}

std::vector<std::uint64_t> KeyValueConfig::get_u64_list(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
        return {};
    std::vector<std::uint64_t> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint64_t v = 0;
        const std::string t = trim(item);
        const auto* first = t.data();
        const auto* last = first + t.size();
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last || t.empty())
            throw ConfigError("key '" + key + "' expects a comma-separated integer list");
        out.push_back(v);
    }
    if (out.empty())
        throw ConfigError("key '" + key + "' expects a non-empty list");
    return out;
}

} // namespace malab
