// Batch front end: augersim <subcommand> --config PATH --out DIR [--seed U64]
//
// Exit status: 0 success, 1 validation/config error, 2 numerical failure.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "auger/errors.hpp"
#include "auger/runner.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

int execute(auger::Subcommand cmd, const std::string& config_path, const std::string& out_dir,
            const std::optional<std::uint64_t>& seed, unsigned threads) {
  try {
    auger::RunRequest req;
    req.command = cmd;
    req.config = auger::KeyValueDocument::load(config_path);
    req.out_dir = out_dir;
    req.seed_override = seed;
    req.threads = threads;
    const auto result = auger::run(req);
    std::cout << auger::to_string(cmd) << ": " << result.summary << '\n';
    for (const auto& f : result.files) std::cout << "  wrote " << f.string() << '\n';
    return 0;
  } catch (const auger::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const auger::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const auger::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-level Auger photoemission simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  struct Entry {
    auger::Subcommand cmd;
    const char* help;
    CLI::App* app = nullptr;
    CLI::Option* seed_opt = nullptr;
  };
  std::vector<Entry> entries = {
      {auger::Subcommand::simulate, "Integrate the rate equations from the ground state"},
      {auger::Subcommand::steady, "Analytic steady state, cross-checked against the ODE"},
      {auger::Subcommand::sweep, "Steady-state photocurrent over a pump or population grid"},
      {auger::Subcommand::decay, "Radiative vs Auger decay of the metastable level"},
      {auger::Subcommand::spectrum, "Collective spectral density, closed form and Monte Carlo"},
  };
  for (auto& e : entries) {
    e.app = app.add_subcommand(auger::to_string(e.cmd), e.help);
    e.app->add_option("--config", config_path, "Key-value configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    e.app->add_option("--out", out_dir, "Output directory")->required();
    e.seed_opt = e.app->add_option("--seed", seed, "Override the config seed");
    e.app->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  for (const auto& e : entries) {
    if (e.app->parsed()) {
      std::optional<std::uint64_t> s;
      if (e.seed_opt->count() > 0) s = seed;
      return execute(e.cmd, config_path, out_dir, s, threads);
    }
  }
  return kExitValidation;
}
