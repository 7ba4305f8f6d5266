#include <iostream>

#include <nlohmann/json.hpp>
#include <omitlab/error.hpp>

#include "commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;
constexpr int kExitParse = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omitlab: hypergraph constructions, oracles and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  omitlab::cli::Globals globals;
  std::function<int()> action;
  omitlab::cli::register_commands(app, globals, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    return action ? action() : kExitOk;
  } catch (const omitlab::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const omitlab::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const omitlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
