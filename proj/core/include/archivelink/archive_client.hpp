// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "archivelink/cdx.hpp"

namespace archivelink {

/// A live CDX endpoint plus the replay service that serves archived bodies.
struct RemoteBackend {
    std::string cdx_endpoint;  // e.g. "https://web.archive.org"
    std::string replay_base;   // e.g. "https://web.archive.org"
};

/// A directory with captures.cdx and bodies/<urlkey>/<timestamp>.html files.
struct FixtureBackend {
    std::string dir;
};

struct ArchiveBackendConfig {
    std::variant<RemoteBackend, FixtureBackend> kind = FixtureBackend{};
    double rate_limit = 1.0;   // max remote requests per second; must be > 0
    std::string cache_dir;     // empty disables the on-disk cache
    int retries = 3;           // retry count after the first attempt
    int retry_delay_ms = 500;  // first backoff; doubles per retry

    bool is_remote() const { return std::holds_alternative<RemoteBackend>(kind); }
};

/// The exact query-string tail of a CDX lookup:
///   url={percent-encoded url}&output=text[&from=YYYY][&to=YYYY]
/// This string is both the wire format for the remote backend and the
/// disk-cache key for every backend, which is what makes a cache warmed by
/// one backend serve any other.
std::string cdx_query_string(std::string_view url, std::optional<int> from_year,
                             std::optional<int> to_year);

/// Replay request path for the raw (unrewritten) bytes of a capture:
///   /web/{timestamp}id_/{original}
std::string replay_path(const Capture& capture);

/// Spaces remote requests at least 1/rate seconds apart across threads.
class RateLimiter {
public:
    explicit RateLimiter(double per_second);
    void acquire();

private:
    std::chrono::steady_clock::duration interval_;
    std::chrono::steady_clock::time_point next_;
    std::mutex mutex_;
};

/// Queries captures and fetches archived bodies from one backend, with a
/// write-through disk cache (atomic tmp+rename writes) and, for the remote
/// backend, a shared rate limiter and exponential-backoff retries. Safe to
/// call from multiple threads.
class ArchiveClient {
public:
    explicit ArchiveClient(ArchiveBackendConfig config);
    ~ArchiveClient();

    ArchiveClient(const ArchiveClient&) = delete;
    ArchiveClient& operator=(const ArchiveClient&) = delete;

    /// All captures of the URL's urlkey, optionally restricted to
    /// from_year <= capture year <= to_year, ascending. A URL with no
    /// captures yields an empty TimeMap. Cache hits never touch the backend.
    TimeMap query_captures(const std::string& url, std::optional<int> from_year = {},
                           std::optional<int> to_year = {});

    /// The archived body bytes of a capture, cached by
    /// (urlkey, timestamp, digest). Throws NotFoundError when the backend
    /// has no body for the capture and NetworkError when a remote stays
    /// unreachable through the retry budget.
    std::string fetch_capture_body(const Capture& capture);

    const ArchiveBackendConfig& config() const { return config_; }

private:
    struct Impl;
    ArchiveBackendConfig config_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace archivelink
