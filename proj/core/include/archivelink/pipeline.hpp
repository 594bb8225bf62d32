// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "archivelink/config.hpp"

namespace archivelink {

/// Stage output locations under config.out_dir.
std::string mentions_path(const PipelineConfig& config);
std::string link_results_path(const PipelineConfig& config);
std::string profiles_path(const PipelineConfig& config);
std::string yearly_csv_path(const PipelineConfig& config);
std::string categories_csv_path(const PipelineConfig& config);
std::string plotdata_csv_path(const PipelineConfig& config);
std::string yearly_json_path(const PipelineConfig& config);
std::string categories_json_path(const PipelineConfig& config);

/// The four pipeline stages. Each validates its slice of the config, writes
/// its outputs under out_dir and is idempotent: identical inputs rewrite
/// byte-identical files. Errors are thrown (see errors.hpp); the CLI maps
/// them to exit codes.

/// Scans every catalog publication for software mentions -> mentions.jsonl.
void run_mine(const PipelineConfig& config);

/// Links every software against the archive -> linkresults.jsonl, in
/// catalog order. Per-software failures go to stderr and the pipeline
/// continues. Returns the number of link results written; throws
/// NetworkError when the backend was entirely unreachable (no results and
/// at least one network failure).
std::size_t run_link(const PipelineConfig& config);

/// Classifies witness pages of linked softwares -> profiles.jsonl (absent
/// profiles omitted). Requires linkresults.jsonl from a prior run_link.
void run_classify(const PipelineConfig& config);

/// Aggregates link results and profiles into the yearly and category
/// tables -> csv/json/plotdata files. Requires both prior stage outputs.
void run_report(const PipelineConfig& config);

}  // namespace archivelink
