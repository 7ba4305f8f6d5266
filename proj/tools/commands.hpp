#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <CLI11.hpp>

namespace omitlab::cli {

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 50'000'000;
  std::size_t jobs = 1;
  std::string out_dir = ".";

  // OMITLAB_OUT wins over --out-dir.
  std::string resolved_out_dir() const;
};

// Registers every subcommand on `app`. The selected command stores its body in
// `action`; main runs it after parsing and maps exceptions to exit codes.
void register_commands(CLI::App& app, Globals& globals, std::function<int()>& action);

}  // namespace omitlab::cli
