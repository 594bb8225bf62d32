// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "archivelink/content_classifier.hpp"
#include "archivelink/mention_miner.hpp"
#include "archivelink/report.hpp"
#include "archivelink/temporal_linker.hpp"

namespace archivelink {

/// JSON-lines forms of the records that flow between pipeline stages. All
/// emitters are byte-deterministic (fixed key order, no trailing spaces);
/// one record per line, no newline included.
///
/// Link result witnesses are serialized as {"timestamp","digest"} or null.

std::string mention_to_json(const Mention& mention);

std::string link_result_to_json(const LinkResult& lr);
LinkResult link_result_from_json(const std::string& line);

std::string profile_to_json(const std::string& software_id, const ContentProfile& profile);
ProfileRecord profile_from_json(const std::string& line);

}  // namespace archivelink
