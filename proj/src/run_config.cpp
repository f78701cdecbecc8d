#include "trabox/run_config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trabox/errors.hpp"

namespace trabox {

namespace {

using nlohmann::json;

void require_known_keys(const json& obj, const char* where,
                        std::initializer_list<const char*> known) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) ok = true;
        if (!ok)
            throw ConfigError(std::string("config: unknown key \"") +
                              item.key() + "\" in " + where);
    }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config: bad value for \"") + key + "\"");
    }
}

// Counts are read through a signed type: a bare get<size_t> would wrap
// negative inputs around instead of rejecting them.
std::size_t get_size(const json& obj, const char* key, std::size_t fallback) {
    if (!obj.contains(key)) return fallback;
    std::int64_t v;
    try {
        v = obj.at(key).get<std::int64_t>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config: bad value for \"") + key + "\"");
    }
    if (v < 0 || v > 100000000)
        throw ConfigError(std::string("config: \"") + key +
                          "\" out of range [0, 1e8]");
    return static_cast<std::size_t>(v);
}

UnitMode parse_unit_mode(const std::string& text) {
    if (text == "paper_units") return UnitMode::paper_units;
    if (text == "absolute") return UnitMode::absolute;
    throw ConfigError("config: unit_mode must be \"paper_units\" or \"absolute\"");
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw ConfigError(std::string("config: invalid JSON: ") + ex.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    require_known_keys(root, "top level",
                       {"potential", "basis_size", "levels", "grid_points",
                        "output_dir", "stability", "oracle", "potential_clip"});
    if (!root.contains("potential"))
        throw ConfigError("config: missing \"potential\" section");

    RunConfig cfg;

    const json& pot = root.at("potential");
    if (!pot.is_object())
        throw ConfigError("config: \"potential\" must be an object");
    require_known_keys(pot, "potential",
                       {"V0", "V1", "VL", "VR", "L", "unit_mode",
                        "allow_extended_strengths"});
    cfg.potential.V0 = get_or(pot, "V0", 0.0);
    cfg.potential.V1 = get_or(pot, "V1", 0.0);
    cfg.potential.VL = get_or(pot, "VL", 0.0);
    cfg.potential.VR = get_or(pot, "VR", 0.0);
    cfg.potential.L = get_or(pot, "L", 1.0);
    cfg.potential.unit_mode =
        parse_unit_mode(get_or<std::string>(pot, "unit_mode", "paper_units"));
    cfg.potential.allow_extended_strengths =
        get_or(pot, "allow_extended_strengths", false);

    cfg.basis_size = get_size(root, "basis_size", cfg.basis_size);
    cfg.levels = get_size(root, "levels", cfg.levels);
    cfg.grid_points = get_size(root, "grid_points", cfg.grid_points);
    cfg.output_dir = get_or<std::string>(root, "output_dir", cfg.output_dir);
    cfg.potential_clip = get_or(root, "potential_clip", cfg.potential_clip);

    if (root.contains("stability")) {
        const json& st = root.at("stability");
        require_known_keys(st, "stability",
                           {"stable_tol", "unstable_tol", "n_max"});
        cfg.stability.stable_tol =
            get_or(st, "stable_tol", cfg.stability.stable_tol);
        cfg.stability.unstable_tol =
            get_or(st, "unstable_tol", cfg.stability.unstable_tol);
        cfg.stability.n_max = get_size(st, "n_max", cfg.stability.n_max);
    }
    if (root.contains("oracle")) {
        const json& orc = root.at("oracle");
        require_known_keys(orc, "oracle", {"grid_points", "levels", "richardson"});
        cfg.oracle.grid_points =
            get_size(orc, "grid_points", cfg.oracle.grid_points);
        cfg.oracle.levels = get_size(orc, "levels", cfg.oracle.levels);
        cfg.oracle.richardson = get_or(orc, "richardson", cfg.oracle.richardson);
    }

    // Validation mirrors the module-level invariants.
    try {
        cfg.potential.validate();
    } catch (const std::domain_error& ex) {
        throw ConfigError(std::string("config: ") + ex.what());
    }
    if (cfg.basis_size < 1) throw ConfigError("config: basis_size must be >= 1");
    if (cfg.levels < 1) throw ConfigError("config: levels must be >= 1");
    if (cfg.grid_points < 2) throw ConfigError("config: grid_points must be >= 2");
    if (!(cfg.potential_clip > 0.0))
        throw ConfigError("config: potential_clip must be > 0");
    if (!(cfg.stability.stable_tol > 0.0) ||
        !(cfg.stability.unstable_tol > cfg.stability.stable_tol))
        throw ConfigError(
            "config: stability tolerances must satisfy 0 < stable_tol < unstable_tol");
    if (cfg.stability.n_max < 4)
        throw ConfigError("config: stability.n_max must be >= 4");
    if (cfg.oracle.grid_points < 100)
        throw ConfigError("config: oracle.grid_points must be >= 100");
    if (cfg.oracle.levels < 1 || cfg.oracle.levels > 10)
        throw ConfigError("config: oracle.levels must be in [1, 10]");

    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

std::uint64_t config_hash(const RunConfig& cfg) {
    json canon;
    canon["potential"] = {
        {"V0", cfg.potential.V0},
        {"V1", cfg.potential.V1},
        {"VL", cfg.potential.VL},
        {"VR", cfg.potential.VR},
        {"L", cfg.potential.L},
        {"unit_mode",
         cfg.potential.unit_mode == UnitMode::paper_units ? "paper_units"
                                                          : "absolute"},
        {"allow_extended_strengths", cfg.potential.allow_extended_strengths}};
    // The hash identifies the computation; output_dir is not part of it.
    canon["basis_size"] = cfg.basis_size;
    canon["levels"] = cfg.levels;
    canon["grid_points"] = cfg.grid_points;
    canon["stability"] = {{"stable_tol", cfg.stability.stable_tol},
                          {"unstable_tol", cfg.stability.unstable_tol},
                          {"n_max", cfg.stability.n_max}};
    canon["oracle"] = {{"grid_points", cfg.oracle.grid_points},
                       {"levels", cfg.oracle.levels},
                       {"richardson", cfg.oracle.richardson}};
    canon["potential_clip"] = cfg.potential_clip;

    const std::string text = canon.dump();
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace trabox
