// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "archivelink/archive_client.hpp"

namespace archivelink {

/// Everything a pipeline stage needs, resolved from (in increasing
/// precedence) a key=value config file, ARCHIVELINK_* environment variables
/// and command-line flags.
///
/// Recognized keys: software, publications, fixture_dir, cdx_endpoint,
/// replay_base, cache_dir, rate_limit, workers, retry_delay_ms, lexicon,
/// rules, out_dir. The matching environment variable is the uppercased key
/// with the ARCHIVELINK_ prefix (e.g. ARCHIVELINK_FIXTURE_DIR).
struct PipelineConfig {
    std::string software_path;
    std::string publications_path;

    std::string fixture_dir;   // exactly one of fixture_dir and cdx_endpoint
    std::string cdx_endpoint;  // must be configured
    std::string replay_base;   // defaults to cdx_endpoint

    std::string cache_dir;
    double rate_limit = 1.0;
    int workers = 4;
    int retry_delay_ms = 500;

    std::string lexicon_path;  // empty: built-in trigger lexicon
    std::string rules_path;    // empty: built-in category rules
    std::string out_dir = "out";
    bool keep_all_statuses = false;

    /// Archive backend settings derived from the fields above.
    ArchiveBackendConfig backend() const;
};

/// Command-line flag values layered on top of file and environment.
struct ConfigOverrides {
    std::optional<std::string> fixture_dir;
    std::optional<std::string> out_dir;
    std::optional<double> rate_limit;
    std::optional<int> workers;
    bool keep_all_statuses = false;
};

/// Reads `config_path` ("key = value" lines, '#' comments; relative paths
/// are taken relative to the file's directory), applies environment
/// variables and then `overrides`. An empty config_path starts from
/// defaults. Throws IoError when the file cannot be read and ParseError on
/// unknown keys or bad values.
PipelineConfig load_pipeline_config(const std::string& config_path,
                                    const ConfigOverrides& overrides);

/// Checks the invariants every stage relies on: exactly one backend kind,
/// catalog files present when `needs_catalog`, fixture directory present,
/// sane rate limit and worker count. Throws ValidationError or IoError.
void validate_config(const PipelineConfig& config, bool needs_catalog);

}  // namespace archivelink
