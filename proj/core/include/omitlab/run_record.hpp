#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace omitlab {

std::string_view library_version() noexcept;

// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string content_digest(std::string_view bytes);

// Manifest of one run: enough to replay it and to check its artifacts.
struct RunRecord {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::map<std::string, std::string> artifacts;  // file name -> digest
  std::map<std::string, bool> verification;      // check name -> result
  double wall_seconds = 0.0;
  std::string version{library_version()};

  void add_artifact(const std::string& name, std::string_view bytes) {
    artifacts[name] = content_digest(bytes);
  }
  bool all_verified() const;

  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

// Writes `bytes` to `path` via a temporary file and rename, so a failing run
// never leaves a partial artifact behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

// Exclusive ownership of a run directory through a lock file created with
// O_EXCL. Throws Error when another process holds it.
class RunDirectoryLock {
 public:
  explicit RunDirectoryLock(const std::filesystem::path& dir);
  ~RunDirectoryLock();
  RunDirectoryLock(const RunDirectoryLock&) = delete;
  RunDirectoryLock& operator=(const RunDirectoryLock&) = delete;

 private:
  std::filesystem::path lock_path_;
};

}  // namespace omitlab
