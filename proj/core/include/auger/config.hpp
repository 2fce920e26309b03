#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "auger/model.hpp"

namespace auger {

/// Flat `key = value` document. Keys may carry one dotted section prefix
/// (`params.w_p`). Lines starting with '#' are comments. Insertion order is
/// preserved so serialization is deterministic.
class KeyValueDocument {
 public:
  static KeyValueDocument parse(std::string_view text);
  static KeyValueDocument load(const std::filesystem::path& path);

  void set(std::string key, std::string value);
  void set(std::string key, double value);

  bool contains(std::string_view key) const;
  std::optional<std::string> find(std::string_view key) const;
  /// Throws MissingKey.
  const std::string& at(std::string_view key) const;
  double number(std::string_view key) const;
  double number_or(std::string_view key, double fallback) const;

  std::vector<std::string> keys() const;
  std::size_t size() const { return entries_.size(); }
  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Shortest round-trippable text is not required; 17 significant digits are.
std::string format_double(double v);
/// Strict full-string parse; `key` names the offending entry in the error.
double parse_double(std::string_view text, std::string_view key);

/// Reads SystemParams from keys `<prefix>w_p`, `<prefix>tau_1`, ... Every key
/// under the prefix must be a known field (UnknownKey otherwise) and every
/// field must be present (MissingKey otherwise). Does not validate ranges.
SystemParams params_from_document(const KeyValueDocument& doc, std::string_view prefix = "");
KeyValueDocument params_to_document(const SystemParams& params, std::string_view prefix = "");
void append_params(KeyValueDocument& doc, const SystemParams& params, std::string_view prefix);

/// Field names as they appear in documents.
const std::vector<std::string>& system_param_keys();

/// Writes to `path.tmp` then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace auger
