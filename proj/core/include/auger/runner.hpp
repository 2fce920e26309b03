#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "auger/config.hpp"
#include "auger/kinetics.hpp"
#include "auger/sweep.hpp"

namespace auger {

enum class Subcommand { simulate, steady, sweep, decay, spectrum };

const char* to_string(Subcommand c);
Subcommand subcommand_from_string(std::string_view s);

/// Every key the batch front end understands. Anything else in a config
/// document is rejected with UnknownKey.
const std::vector<std::string>& known_config_keys();
void check_config_keys(const KeyValueDocument& doc);

/// params.* plus the optional fn.* override of beta, validated.
SystemParams params_from_config(const KeyValueDocument& doc);
SolverOptions solver_options_from_config(const KeyValueDocument& doc, const SystemParams& params);
SweepConfig sweep_config_from_document(const KeyValueDocument& doc,
                                       const std::filesystem::path& out_dir);

bool parse_bool(std::string_view text, std::string_view key);
std::uint64_t parse_u64(std::string_view text, std::string_view key);

struct RunRequest {
  Subcommand command = Subcommand::steady;
  KeyValueDocument config;
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  unsigned threads = 1;
};

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::string summary;
};

/// Executes one subcommand and writes its outputs (atomically) under
/// out_dir, creating the directory if needed.
RunResult run(const RunRequest& request);

}  // namespace auger
