#include "afcs/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace afcs {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(key + ": cannot parse value '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(key + ": cannot parse integer '" + value + "'");
    }
}

const std::set<std::string> kKnownKeys = {
    "x0", "sigma0_sq", "sigma_v_sq", "a0",     "gamma",
    "n_zeta", "f0",    "f_base",     "mu",     "n_cycles"};

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
    std::map<std::string, std::string> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": empty key or value");
        pairs[key] = value;
    }
    return pairs;
}

SystemConfig config_from_pairs(const std::map<std::string, std::string>& base,
                               const std::map<std::string, std::string>& overrides) {
    std::map<std::string, std::string> pairs = base;
    for (const auto& [k, v] : overrides) pairs[k] = v;

    for (const auto& [k, v] : pairs)
        if (!kKnownKeys.count(k))
            throw ValidationError(k + ": unknown config key");

    auto require_key = [&](const std::string& key) -> const std::string& {
        const auto it = pairs.find(key);
        if (it == pairs.end())
            throw ValidationError(key + ": required config key missing");
        return it->second;
    };

    SystemConfig cfg;
    cfg.x0 = parse_real("x0", require_key("x0"));
    cfg.sigma0_sq = parse_real("sigma0_sq", require_key("sigma0_sq"));
    cfg.sigma_v_sq = parse_real("sigma_v_sq", require_key("sigma_v_sq"));
    cfg.a0 = parse_real("a0", require_key("a0"));
    cfg.gamma = parse_real("gamma", require_key("gamma"));
    cfg.n_zeta = parse_real("n_zeta", require_key("n_zeta"));
    cfg.f0 = parse_real("f0", require_key("f0"));
    cfg.mu = parse_real("mu", require_key("mu"));

    const bool has_fbase = pairs.count("f_base") > 0;
    const bool has_ncycles = pairs.count("n_cycles") > 0;
    if (has_fbase) cfg.f_base = parse_real("f_base", pairs.at("f_base"));
    if (has_ncycles) {
        cfg.n_cycles = parse_int("n_cycles", pairs.at("n_cycles"));
    } else if (has_fbase) {
        if (!(*cfg.f_base > 0.0)) throw ValidationError("f_base: must be > 0");
        cfg.n_cycles = static_cast<int>(std::llround(cfg.f0 / *cfg.f_base));
    } else {
        throw ValidationError("n_cycles: required (directly or via f_base)");
    }
    return cfg;
}

SystemConfig load_config(const std::string& path,
                         const std::map<std::string, std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    return config_from_pairs(parse_key_values(in), overrides);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace afcs
