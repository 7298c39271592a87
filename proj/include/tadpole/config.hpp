#pragma once

// Run configuration shared by all CLI commands: defaults, flat key=value
// config-file parsing, and a stable FNV-1a hash stamped into output files.
// Precedence is CLI flags > config file > defaults (assembled by the CLI).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "tadpole/errors.hpp"
#include "tadpole/quadrature.hpp"

namespace tadpole {

enum class OutputFormat { csv, json };

struct RunConfig {
    double quad_tol = 1e-10;
    double root_tol = 1e-10;
    int grid_n = 400;
    double L_trunc_factor = 20.0;
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::csv;
};

inline void validate(const RunConfig& cfg) {
    if (!(cfg.quad_tol > 0.0))
        throw domain_error("config: quad_tol must be positive");
    if (!(cfg.root_tol > 0.0))
        throw domain_error("config: root_tol must be positive");
    if (cfg.grid_n < 2) throw domain_error("config: grid_n must be >= 2");
    if (!(cfg.L_trunc_factor > 0.0))
        throw domain_error("config: L_trunc_factor must be positive");
}

inline QuadratureSpec quadrature_spec(const RunConfig& cfg) {
    QuadratureSpec spec;
    spec.tolerance = cfg.quad_tol;
    return spec;
}

// Flat key=value file; '#' starts a comment, blank lines ignored.
inline std::map<std::string, std::string> read_key_value_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("config: cannot open file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const char* ws = " \t\r";
            const std::size_t b = s.find_first_not_of(ws);
            if (b == std::string::npos) return std::string();
            const std::size_t e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        };
        if (strip(line).empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config: expected key=value, got '" + line +
                               "'");
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return kv;
}

inline void apply_key_value(RunConfig& cfg,
                            const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        try {
            if (key == "quad_tol")
                cfg.quad_tol = std::stod(value);
            else if (key == "root_tol")
                cfg.root_tol = std::stod(value);
            else if (key == "grid_n")
                cfg.grid_n = std::stoi(value);
            else if (key == "L_trunc_factor")
                cfg.L_trunc_factor = std::stod(value);
            else if (key == "output_dir")
                cfg.output_dir = value;
            else if (key == "format") {
                if (value == "csv")
                    cfg.format = OutputFormat::csv;
                else if (value == "json")
                    cfg.format = OutputFormat::json;
                else
                    throw domain_error("config: format must be csv or json");
            } else {
                throw domain_error("config: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw domain_error("config: bad value for '" + key + "'");
        } catch (const std::out_of_range&) {
            throw domain_error("config: value out of range for '" + key + "'");
        }
    }
}

// 64-bit FNV-1a over the numerically relevant fields (output_dir excluded so
// the same computation hashes identically wherever it is written).
inline std::string config_hash(const RunConfig& cfg) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "quad_tol=%.17g;root_tol=%.17g;grid_n=%d;"
                  "L_trunc_factor=%.17g;format=%s",
                  cfg.quad_tol, cfg.root_tol, cfg.grid_n, cfg.L_trunc_factor,
                  cfg.format == OutputFormat::csv ? "csv" : "json");
    std::uint64_t h = 1469598103934665603ull;
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(h));
    return out;
}

}  // namespace tadpole
