#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <omitlab/run_record.hpp>

namespace omitlab::cli {

// Artifacts are held in memory until every check has passed, then written
// under the run-directory lock. A failed write removes whatever was written.
class Staging {
 public:
  explicit Staging(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Artifacts are digested into the record; sidecars (reports, manifests) are not.
  void artifact(const std::string& name, std::string bytes);
  void sidecar(const std::string& name, std::string bytes);

  // Writes everything plus `<stem>.run.json` holding the record.
  void commit(RunRecord& record, const std::string& stem);

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
  std::vector<std::size_t> digests_;
};

}  // namespace omitlab::cli
