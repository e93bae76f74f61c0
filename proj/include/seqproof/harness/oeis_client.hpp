#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "seqproof/core/errors.hpp"
#include "seqproof/harness/bfile.hpp"

namespace seqproof {

namespace fs = std::filesystem;

// Fetches a URL body. Implementations throw NetworkUnavailable on failure.
using Transport = std::function<std::string(const std::string& url)>;

struct OeisClientConfig {
  fs::path cache_dir;
  fs::path fixtures_dir;
  bool offline_enforced = false;
  std::chrono::milliseconds min_request_interval{2000};
};

inline std::string bfile_url(const std::string& id) {
  return "https://oeis.org/" + id + "/" + bfile_name(id);
}

// SEQPROOF_CACHE_DIR, SEQPROOF_FIXTURES_DIR and SEQPROOF_OFFLINE override the
// defaults ($XDG_CACHE_HOME/seqproof or ~/.cache/seqproof, the in-repo
// fixtures, online allowed).
inline OeisClientConfig config_from_env() {
  OeisClientConfig cfg;
  if (const char* dir = std::getenv("SEQPROOF_CACHE_DIR"); dir && *dir) {
    cfg.cache_dir = dir;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    cfg.cache_dir = fs::path(xdg) / "seqproof";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    cfg.cache_dir = fs::path(home) / ".cache" / "seqproof";
  } else {
    cfg.cache_dir = ".seqproof-cache";
  }
  if (const char* dir = std::getenv("SEQPROOF_FIXTURES_DIR"); dir && *dir) {
    cfg.fixtures_dir = dir;
  } else {
#ifdef SEQPROOF_DEFAULT_FIXTURES_DIR
    cfg.fixtures_dir = SEQPROOF_DEFAULT_FIXTURES_DIR;
#else
    cfg.fixtures_dir = "fixtures/bfiles";
#endif
  }
  if (const char* off = std::getenv("SEQPROOF_OFFLINE"); off && *off && std::string(off) != "0")
    cfg.offline_enforced = true;
  return cfg;
}

inline std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary and renames it into place.
inline void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

// b-file lookup: cache, then vendored fixtures, then (opt-in) the network.
// Network requests are serialized and spaced by min_request_interval.
class OeisClient {
 public:
  explicit OeisClient(OeisClientConfig config, Transport transport = {})
      : config_(std::move(config)), transport_(std::move(transport)) {}

  SequenceRecord fetch(const std::string& id, bool online) {
    if (!is_valid_oeis_id(id)) throw std::invalid_argument("malformed OEIS id '" + id + "'");
    const std::string name = bfile_name(id);
    if (auto cached = read_file(config_.cache_dir / name)) return parse_bfile(id, *cached);
    if (!config_.fixtures_dir.empty()) {
      if (auto fixture = read_file(config_.fixtures_dir / name)) return parse_bfile(id, *fixture);
    }
    if (!online || config_.offline_enforced)
      throw NetworkUnavailable(id + ": not cached and network access is disabled");
    if (!transport_) throw NetworkUnavailable(id + ": no transport configured");
    std::string body = request(bfile_url(id));
    SequenceRecord record = parse_bfile(id, body);  // reject garbage before caching
    write_file_atomic(config_.cache_dir / name, body);
    return record;
  }

  std::size_t network_requests() const { return requests_; }

  const OeisClientConfig& config() const { return config_; }

 private:
  std::string request(const std::string& url) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (last_request_) {
      auto next = *last_request_ + config_.min_request_interval;
      auto now = std::chrono::steady_clock::now();
      if (now < next) std::this_thread::sleep_for(next - now);
    }
    last_request_ = std::chrono::steady_clock::now();
    ++requests_;
    return transport_(url);
  }

  OeisClientConfig config_;
  Transport transport_;
  std::mutex mutex_;
  std::optional<std::chrono::steady_clock::time_point> last_request_;
  std::size_t requests_ = 0;
};

}  // namespace seqproof
