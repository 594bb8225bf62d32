// SPDX-License-Identifier: Apache-2.0
#include "archivelink/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "archivelink/errors.hpp"

namespace fs = std::filesystem;

namespace archivelink {

namespace {

const char* const kKeys[] = {"software",    "publications",  "fixture_dir",
                             "cdx_endpoint", "replay_base",   "cache_dir",
                             "rate_limit",   "workers",       "retry_delay_ms",
                             "lexicon",      "rules",         "out_dir"};

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

bool is_path_key(const std::string& key) {
    return key == "software" || key == "publications" || key == "fixture_dir" ||
           key == "cache_dir" || key == "lexicon" || key == "rules" || key == "out_dir";
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    fs::path base = fs::path(path).parent_path();
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path, line_no, "expected 'key = value'");
        }
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        bool known = false;
        for (const char* candidate : kKeys) {
            if (key == candidate) known = true;
        }
        if (!known) throw ParseError(path, line_no, "unknown key '" + key + "'");
        if (is_path_key(key) && !value.empty() && !fs::path(value).is_absolute()) {
            value = (base / value).lexically_normal().string();
        }
        values[key] = value;
    }
    return values;
}

void apply_env(std::map<std::string, std::string>& values) {
    for (const char* key : kKeys) {
        std::string env_name = "ARCHIVELINK_";
        for (const char* p = key; *p != '\0'; ++p) {
            env_name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(*p))));
        }
        if (const char* value = std::getenv(env_name.c_str())) {
            values[key] = value;
        }
    }
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + value + "' for " + key);
    }
}

int parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        int parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ParseError("bad integer value '" + value + "' for " + key);
    }
}

}  // namespace

ArchiveBackendConfig PipelineConfig::backend() const {
    ArchiveBackendConfig cfg;
    if (!fixture_dir.empty()) {
        cfg.kind = FixtureBackend{fixture_dir};
    } else {
        cfg.kind = RemoteBackend{cdx_endpoint, replay_base.empty() ? cdx_endpoint : replay_base};
    }
    cfg.rate_limit = rate_limit;
    cfg.cache_dir = cache_dir;
    cfg.retry_delay_ms = retry_delay_ms;
    return cfg;
}

PipelineConfig load_pipeline_config(const std::string& config_path,
                                    const ConfigOverrides& overrides) {
    std::map<std::string, std::string> values;
    if (!config_path.empty()) values = read_config_file(config_path);
    apply_env(values);

    PipelineConfig cfg;
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    };
    if (auto v = take("software")) cfg.software_path = *v;
    if (auto v = take("publications")) cfg.publications_path = *v;
    if (auto v = take("fixture_dir")) cfg.fixture_dir = *v;
    if (auto v = take("cdx_endpoint")) cfg.cdx_endpoint = *v;
    if (auto v = take("replay_base")) cfg.replay_base = *v;
    if (auto v = take("cache_dir")) cfg.cache_dir = *v;
    if (auto v = take("rate_limit")) cfg.rate_limit = parse_double(*v, "rate_limit");
    if (auto v = take("workers")) cfg.workers = parse_int(*v, "workers");
    if (auto v = take("retry_delay_ms")) cfg.retry_delay_ms = parse_int(*v, "retry_delay_ms");
    if (auto v = take("lexicon")) cfg.lexicon_path = *v;
    if (auto v = take("rules")) cfg.rules_path = *v;
    if (auto v = take("out_dir")) cfg.out_dir = *v;

    if (overrides.fixture_dir) {
        cfg.fixture_dir = *overrides.fixture_dir;
        cfg.cdx_endpoint.clear();
        cfg.replay_base.clear();
    }
    if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
    if (overrides.rate_limit) cfg.rate_limit = *overrides.rate_limit;
    if (overrides.workers) cfg.workers = *overrides.workers;
    if (overrides.keep_all_statuses) cfg.keep_all_statuses = true;
    return cfg;
}

void validate_config(const PipelineConfig& config, bool needs_catalog) {
    const bool has_fixture = !config.fixture_dir.empty();
    const bool has_remote = !config.cdx_endpoint.empty();
    if (has_fixture == has_remote) {
        throw ValidationError(
            has_fixture ? "both fixture_dir and cdx_endpoint configured; pick one"
                        : "no archive backend configured (set fixture_dir or cdx_endpoint)");
    }
    if (has_fixture && !fs::is_directory(config.fixture_dir)) {
        throw ValidationError("fixture_dir '" + config.fixture_dir + "' is not a directory");
    }
    if (config.rate_limit <= 0) throw ValidationError("rate_limit must be > 0");
    if (config.workers < 1) throw ValidationError("workers must be >= 1");
    if (needs_catalog) {
        if (config.software_path.empty() || config.publications_path.empty()) {
            throw ValidationError("software and publications catalog paths must be set");
        }
        for (const std::string& path : {config.software_path, config.publications_path}) {
            if (!fs::exists(path)) throw IoError("catalog file '" + path + "' not found");
        }
    }
    if (!config.lexicon_path.empty() && !fs::exists(config.lexicon_path)) {
        throw IoError("lexicon file '" + config.lexicon_path + "' not found");
    }
    if (!config.rules_path.empty() && !fs::exists(config.rules_path)) {
        throw IoError("ruleset file '" + config.rules_path + "' not found");
    }
    if (config.out_dir.empty()) throw ValidationError("out_dir must be set");
}

}  // namespace archivelink
