#include "staging.hpp"

namespace omitlab::cli {

void Staging::artifact(const std::string& name, std::string bytes) {
  files_.emplace_back(name, std::move(bytes));
  digests_.push_back(files_.size() - 1);
}

void Staging::sidecar(const std::string& name, std::string bytes) {
  files_.emplace_back(name, std::move(bytes));
}

void Staging::commit(RunRecord& record, const std::string& stem) {
  for (std::size_t i : digests_) record.add_artifact(files_[i].first, files_[i].second);
  files_.emplace_back(stem + ".run.json", record.to_json().dump(2) + "\n");

  RunDirectoryLock lock(dir_);
  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [name, bytes] : files_) {
      write_file_atomic(dir_ / name, bytes);
      written.push_back(dir_ / name);
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
}

}  // namespace omitlab::cli
