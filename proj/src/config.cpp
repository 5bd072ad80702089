#include "gs/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace gs {

KernelSpec kernel_spec(const SimConfig& cfg) {
    return KernelSpec{cfg.epsilon, cfg.lattice.points, cfg.lattice.points,
                      cfg.lattice.spacing};
}

std::string to_string(ModelVariant v) {
    return v == ModelVariant::local ? "local" : "mixed";
}

std::string to_string(SeedMode m) {
    switch (m) {
        case SeedMode::uniform: return "uniform";
        case SeedMode::center_square: return "center-square";
        default: return "center-square-noise";
    }
}

namespace {

constexpr std::array kKnownKeys = {
    "variant",        "L",          "n",          "f",
    "kappa",          "d_u",        "d_v",        "dt",
    "epsilon",        "t_end",      "seed_mode",  "block_side",
    "u_in",           "v_in",       "noise_amplitude", "rng_seed",
    "report_every",   "snapshot_every", "output_dir", "emit_images",
    "waive_stability",
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t cur = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
            prev = cur;
        }
    }
    return row[b.size()];
}

std::string nearest_key(std::string_view key) {
    std::string best = kKnownKeys[0];
    std::size_t best_d = edit_distance(key, best);
    for (const char* k : kKnownKeys) {
        const std::size_t d = edit_distance(key, k);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        fail(line, "key '" + key + "': cannot parse '" + value + "' as a number");
    }
    return x;
}

long long parse_int(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const long long x = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        fail(line, "key '" + key + "': cannot parse '" + value + "' as an integer");
    }
    return x;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(line, "key '" + key + "': expected true/false, got '" + value + "'");
}

} // namespace

SimConfig parse_config(std::string_view text) {
    SimConfig cfg;
    double L = cfg.lattice.length;
    int n = cfg.lattice.points;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "missing key before '='");
        if (value.empty()) fail(line_no, "key '" + key + "': missing value");

        if (key == "variant") {
            if (value == "local") cfg.variant = ModelVariant::local;
            else if (value == "mixed") cfg.variant = ModelVariant::mixed;
            else fail(line_no, "key 'variant': expected local or mixed, got '" + value + "'");
        } else if (key == "L") {
            L = parse_double(value, key, line_no);
        } else if (key == "n") {
            n = static_cast<int>(parse_int(value, key, line_no));
        } else if (key == "f") {
            cfg.params.f = parse_double(value, key, line_no);
        } else if (key == "kappa") {
            cfg.params.kappa = parse_double(value, key, line_no);
        } else if (key == "d_u") {
            cfg.params.d_u = parse_double(value, key, line_no);
        } else if (key == "d_v") {
            cfg.params.d_v = parse_double(value, key, line_no);
        } else if (key == "dt") {
            cfg.params.dt = parse_double(value, key, line_no);
        } else if (key == "epsilon") {
            cfg.epsilon = parse_double(value, key, line_no);
        } else if (key == "t_end") {
            cfg.t_end = parse_double(value, key, line_no);
        } else if (key == "seed_mode") {
            if (value == "uniform") cfg.seed.mode = SeedMode::uniform;
            else if (value == "center-square") cfg.seed.mode = SeedMode::center_square;
            else if (value == "center-square-noise") {
                cfg.seed.mode = SeedMode::center_square_noise;
            } else {
                fail(line_no, "key 'seed_mode': expected uniform, center-square or "
                              "center-square-noise, got '" + value + "'");
            }
        } else if (key == "block_side") {
            cfg.seed.block_side = static_cast<int>(parse_int(value, key, line_no));
        } else if (key == "u_in") {
            cfg.seed.u_in = parse_double(value, key, line_no);
        } else if (key == "v_in") {
            cfg.seed.v_in = parse_double(value, key, line_no);
        } else if (key == "noise_amplitude") {
            cfg.seed.noise_amplitude = parse_double(value, key, line_no);
        } else if (key == "rng_seed") {
            char* end = nullptr;
            cfg.seed.rng_seed = std::strtoull(value.c_str(), &end, 10);
            if (end == value.c_str() || *end != '\0') {
                fail(line_no, "key 'rng_seed': cannot parse '" + value + "'");
            }
        } else if (key == "report_every") {
            cfg.report_every = static_cast<int>(parse_int(value, key, line_no));
        } else if (key == "snapshot_every") {
            cfg.snapshot_every = static_cast<int>(parse_int(value, key, line_no));
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else if (key == "emit_images") {
            cfg.emit_images = parse_bool(value, key, line_no);
        } else if (key == "waive_stability") {
            cfg.waive_stability = parse_bool(value, key, line_no);
        } else {
            fail(line_no, "unknown key '" + key + "' (did you mean '" +
                          nearest_key(key) + "'?)");
        }
    }

    if (n < 1) throw ConfigError("key 'n': lattice points must be >= 1");
    if (!(L > 0.0)) throw ConfigError("key 'L': domain side must be > 0");
    cfg.lattice = LatticeSpec(L, n);
    cfg.params.h = cfg.lattice.spacing;

    if (!(cfg.params.kappa > 0.0)) throw ConfigError("key 'kappa': must be > 0");
    if (cfg.params.f < 0.0) throw ConfigError("key 'f': must be >= 0");
    if (cfg.params.d_u < 0.0) throw ConfigError("key 'd_u': must be >= 0");
    if (cfg.params.d_v < 0.0) throw ConfigError("key 'd_v': must be >= 0");
    if (!(cfg.params.dt > 0.0)) throw ConfigError("key 'dt': must be > 0");
    if (!(cfg.epsilon > 0.0)) throw ConfigError("key 'epsilon': must be > 0");
    if (cfg.t_end < 0.0) throw ConfigError("key 't_end': must be >= 0");
    if (cfg.report_every < 1) throw ConfigError("key 'report_every': must be >= 1");
    if (cfg.snapshot_every < 0) throw ConfigError("key 'snapshot_every': must be >= 0");
    if (cfg.seed.mode != SeedMode::uniform) {
        if (cfg.seed.block_side < 1 || cfg.seed.block_side > n) {
            throw ConfigError("key 'block_side': must be in [1, n]");
        }
        if (cfg.seed.noise_amplitude < 0.0) {
            throw ConfigError("key 'noise_amplitude': must be >= 0");
        }
    }
    return cfg;
}

namespace {
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
} // namespace

std::string serialize_config(const SimConfig& cfg) {
    std::ostringstream out;
    out << "variant = " << to_string(cfg.variant) << '\n'
        << "L = " << fmt(cfg.lattice.length) << '\n'
        << "n = " << cfg.lattice.points << '\n'
        << "f = " << fmt(cfg.params.f) << '\n'
        << "kappa = " << fmt(cfg.params.kappa) << '\n'
        << "d_u = " << fmt(cfg.params.d_u) << '\n'
        << "d_v = " << fmt(cfg.params.d_v) << '\n'
        << "dt = " << fmt(cfg.params.dt) << '\n'
        << "epsilon = " << fmt(cfg.epsilon) << '\n'
        << "t_end = " << fmt(cfg.t_end) << '\n'
        << "seed_mode = " << to_string(cfg.seed.mode) << '\n'
        << "block_side = " << cfg.seed.block_side << '\n'
        << "u_in = " << fmt(cfg.seed.u_in) << '\n'
        << "v_in = " << fmt(cfg.seed.v_in) << '\n'
        << "noise_amplitude = " << fmt(cfg.seed.noise_amplitude) << '\n'
        << "rng_seed = " << cfg.seed.rng_seed << '\n'
        << "report_every = " << cfg.report_every << '\n'
        << "snapshot_every = " << cfg.snapshot_every << '\n'
        << "output_dir = " << cfg.output_dir << '\n'
        << "emit_images = " << (cfg.emit_images ? "true" : "false") << '\n'
        << "waive_stability = " << (cfg.waive_stability ? "true" : "false") << '\n';
    return out.str();
}

} // namespace gs
