#include "omitlab/run_record.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "omitlab/error.hpp"
#include "omitlab/random.hpp"

#ifndef OMITLAB_VERSION
#define OMITLAB_VERSION "0.0.0"
#endif

namespace omitlab {

std::string_view library_version() noexcept { return OMITLAB_VERSION; }

std::string content_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(string_tag(bytes)));
  return buf;
}

bool RunRecord::all_verified() const {
  for (const auto& [name, ok] : verification)
    if (!ok) return false;
  return true;
}

nlohmann::json RunRecord::to_json() const {
  return {{"command", command},
          {"parameters", parameters},
          {"seed", seed},
          {"artifacts", artifacts},
          {"verification", verification},
          {"wall_seconds", wall_seconds},
          {"version", version}};
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  RunRecord r;
  try {
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.artifacts = j.at("artifacts").get<std::map<std::string, std::string>>();
    r.verification = j.at("verification").get<std::map<std::string, bool>>();
    r.wall_seconds = j.value("wall_seconds", 0.0);
    r.version = j.value("version", std::string(library_version()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run record: ") + e.what(), 0);
  }
  return r;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RunDirectoryLock::RunDirectoryLock(const std::filesystem::path& dir)
    : lock_path_(dir / ".omitlab.lock") {
  std::filesystem::create_directories(dir);
  const int fd = ::open(lock_path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    throw Error("run directory " + dir.string() + " is locked by another process (" +
                lock_path_.string() + ")");
  }
  const std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] const auto written = ::write(fd, pid.data(), pid.size());
  ::close(fd);
}

RunDirectoryLock::~RunDirectoryLock() {
  std::error_code ec;
  std::filesystem::remove(lock_path_, ec);
}

}  // namespace omitlab
