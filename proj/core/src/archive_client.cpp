// SPDX-License-Identifier: Apache-2.0
#include "archivelink/archive_client.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "archivelink/detail/sha256.hpp"
#include "archivelink/errors.hpp"
#include "archivelink/surt.hpp"
#include "archivelink/url.hpp"

namespace fs = std::filesystem;

namespace archivelink {

std::string cdx_query_string(std::string_view url, std::optional<int> from_year,
                             std::optional<int> to_year) {
    std::string qs = "url=" + percent_encode(url) + "&output=text";
    if (from_year) qs += "&from=" + std::to_string(*from_year);
    if (to_year) qs += "&to=" + std::to_string(*to_year);
    return qs;
}

std::string replay_path(const Capture& capture) {
    return "/web/" + capture.timestamp + "id_/" + capture.original;
}

RateLimiter::RateLimiter(double per_second)
    : interval_(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(1.0 / per_second))),
      next_(std::chrono::steady_clock::now()) {}

void RateLimiter::acquire() {
    std::chrono::steady_clock::time_point slot;
    {
        std::lock_guard lock(mutex_);
        auto now = std::chrono::steady_clock::now();
        slot = std::max(next_, now);
        next_ = slot + interval_;
    }
    std::this_thread::sleep_until(slot);
}

namespace {

// Splits "https://host:port/prefix" into an httplib origin and path prefix.
struct Origin {
    std::string base;    // scheme://host[:port]
    std::string prefix;  // path prefix, no trailing slash
};

Origin split_origin(const std::string& endpoint) {
    ParsedUrl u = parse_http_url(endpoint);
    Origin o;
    o.base = u.scheme + "://" + u.host;
    if (u.port && !u.is_default_port()) o.base += ":" + std::to_string(*u.port);
    o.prefix = u.path;
    while (!o.prefix.empty() && o.prefix.back() == '/') o.prefix.pop_back();
    return o;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view data) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    auto tid = std::hash<std::thread::id>{}(std::this_thread::get_id()) & 0xFFFF;
    tmp += ".tmp" + std::to_string(::getpid()) + "_" + std::to_string(tid);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) throw IoError("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

std::string fixture_body_dir(std::string_view urlkey) {
    std::string dir(urlkey);
    std::replace(dir.begin(), dir.end(), '/', '_');
    return dir;
}

}  // namespace

struct ArchiveClient::Impl {
    std::optional<RateLimiter> limiter;

    std::once_flag fixture_once;
    std::vector<Capture> fixture_captures;
    std::exception_ptr fixture_error;

    void load_fixture(const std::string& dir) {
        std::call_once(fixture_once, [&] {
            try {
                fs::path cdx = fs::path(dir) / "captures.cdx";
                if (!fs::exists(cdx)) {
                    throw BackendError("fixture index '" + cdx.string() + "' not found");
                }
                std::ifstream in(cdx);
                std::string line;
                while (std::getline(in, line)) {
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty()) continue;
                    fixture_captures.push_back(parse_cdx_line(line));
                }
            } catch (...) {
                fixture_error = std::current_exception();
            }
        });
        if (fixture_error) std::rethrow_exception(fixture_error);
    }
};

ArchiveClient::ArchiveClient(ArchiveBackendConfig config)
    : config_(std::move(config)), impl_(std::make_unique<Impl>()) {
    if (config_.rate_limit <= 0) {
        throw ValidationError("archive rate limit must be > 0");
    }
    impl_->limiter.emplace(config_.rate_limit);
}

ArchiveClient::~ArchiveClient() = default;

namespace {

// One GET with retries. Returns the body on 200, nullopt on 404.
std::optional<std::string> http_get(const Origin& origin, const std::string& path,
                                    const ArchiveBackendConfig& cfg, RateLimiter& limiter) {
    int delay_ms = cfg.retry_delay_ms;
    std::string last_error;
    for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
        limiter.acquire();
        httplib::Client cli(origin.base);
        cli.set_follow_location(true);
        httplib::Result res = cli.Get(origin.prefix + path);
        if (!res) {
            last_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status == 200) return res->body;
        if (res->status == 404) return std::nullopt;
        last_error = "HTTP " + std::to_string(res->status);
        if (res->status < 500) break;  // 4xx other than 404 will not improve
    }
    throw NetworkError("GET " + origin.base + origin.prefix + path + " failed: " + last_error);
}

}  // namespace

TimeMap ArchiveClient::query_captures(const std::string& url, std::optional<int> from_year,
                                      std::optional<int> to_year) {
    const std::string urlkey = canonicalize_url(url);
    const std::string query = cdx_query_string(url, from_year, to_year);

    fs::path cache_path;
    if (!config_.cache_dir.empty()) {
        cache_path = fs::path(config_.cache_dir) / "queries" /
                     (detail::sha256_hex(query) + ".cdx");
    }

    std::string response;
    bool have_response = false;
    if (!cache_path.empty() && fs::exists(cache_path)) {
        response = read_file(cache_path);
        have_response = true;
    }

    if (!have_response) {
        if (const auto* fixture = std::get_if<FixtureBackend>(&config_.kind)) {
            impl_->load_fixture(fixture->dir);
            std::string lines;
            for (const Capture& c : impl_->fixture_captures) {
                if (c.urlkey != urlkey) continue;
                int year = c.year();
                if (from_year && year < *from_year) continue;
                if (to_year && year > *to_year) continue;
                lines += format_cdx_line(c);
                lines += '\n';
            }
            response = std::move(lines);
        } else {
            const auto& remote = std::get<RemoteBackend>(config_.kind);
            Origin origin = split_origin(remote.cdx_endpoint);
            auto body = http_get(origin, "/cdx/search/cdx?" + query, config_, *impl_->limiter);
            response = body.value_or("");
        }
        if (!cache_path.empty()) write_file_atomic(cache_path, response);
    }

    std::vector<Capture> captures;
    std::vector<std::string> urlkeys{urlkey};
    std::istringstream in(response);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Capture c = parse_cdx_line(line);
        int year = c.year();
        if (from_year && year < *from_year) continue;
        if (to_year && year > *to_year) continue;
        // A remote index may canonicalize slightly differently; keep its key
        // so the TimeMap invariant (capture urlkey is a queried key) holds.
        if (c.urlkey != urlkey) urlkeys.push_back(c.urlkey);
        captures.push_back(std::move(c));
    }
    return TimeMap::build(std::move(urlkeys), std::move(captures));
}

std::string ArchiveClient::fetch_capture_body(const Capture& capture) {
    fs::path cache_path;
    if (!config_.cache_dir.empty()) {
        const std::string key =
            capture.urlkey + "\n" + capture.timestamp + "\n" + capture.digest;
        cache_path = fs::path(config_.cache_dir) / "bodies" /
                     (detail::sha256_hex(key) + ".bin");
        if (fs::exists(cache_path)) return read_file(cache_path);
    }

    std::string body;
    if (const auto* fixture = std::get_if<FixtureBackend>(&config_.kind)) {
        fs::path path = fs::path(fixture->dir) / "bodies" /
                        fixture_body_dir(capture.urlkey) / (capture.timestamp + ".html");
        if (!fs::exists(path)) {
            throw NotFoundError("no archived body at '" + path.string() + "'");
        }
        body = read_file(path);
    } else {
        const auto& remote = std::get<RemoteBackend>(config_.kind);
        Origin origin = split_origin(remote.replay_base);
        auto result = http_get(origin, replay_path(capture), config_, *impl_->limiter);
        if (!result) {
            throw NotFoundError("replay has no body for " + capture.original + " @ " +
                                capture.timestamp);
        }
        body = std::move(*result);
    }
    if (!cache_path.empty()) write_file_atomic(cache_path, body);
    return body;
}

}  // namespace archivelink
