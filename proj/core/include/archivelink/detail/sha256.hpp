// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace archivelink::detail {

// Hex-encoded SHA-256 of the input bytes. Used for cache file names, where a
// stable collision-free mapping from keys to paths matters across runs.
std::string sha256_hex(std::string_view data);

}  // namespace archivelink::detail
