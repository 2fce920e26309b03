#include "auger/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "auger/errors.hpp"

namespace auger {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  if (std::count(key.begin(), key.end(), '.') > 1) return false;
  if (key.front() == '.' || key.back() == '.') return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.';
  });
}

std::string energies_to_string(const LevelEnergies& e) {
  return format_double(e.e0) + ", " + format_double(e.e1) + ", " + format_double(e.e2) + ", " +
         format_double(e.e3);
}

LevelEnergies energies_from_string(std::string_view text, std::string_view key) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(parse_double(trim(piece), key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) {
    throw ConfigError(std::string(key) + ": expected 4 comma-separated energies E0, E1, E2, E3");
  }
  return {values[0], values[1], values[2], values[3]};
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(std::string_view text) {
  KeyValueDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (!valid_key(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": malformed key '" +
                        std::string(key) + "'");
    }
    if (doc.contains(key)) throw ConfigError("duplicate key '" + std::string(key) + "'");
    doc.entries_.emplace_back(std::string(key), std::string(value));
  }
  return doc;
}

KeyValueDocument KeyValueDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void KeyValueDocument::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

void KeyValueDocument::set(std::string key, double value) { set(std::move(key), format_double(value)); }

bool KeyValueDocument::contains(std::string_view key) const { return find(key).has_value(); }

std::optional<std::string> KeyValueDocument::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& KeyValueDocument::at(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw MissingKey(std::string(key));
}

double KeyValueDocument::number(std::string_view key) const { return parse_double(at(key), key); }

double KeyValueDocument::number_or(std::string_view key, double fallback) const {
  const auto v = find(key);
  return v ? parse_double(*v, key) : fallback;
}

std::vector<std::string> KeyValueDocument::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

std::string KeyValueDocument::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view key) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("key '" + std::string(key) + "': cannot parse number '" + std::string(text) +
                      "'");
  }
  return v;
}

const std::vector<std::string>& system_param_keys() {
  static const std::vector<std::string> keys = {"w_p",     "tau_1",   "tau_3", "tau_sp",
                                                "gamma_A", "n_total", "beta",  "energies",
                                                "work_function"};
  return keys;
}

SystemParams params_from_document(const KeyValueDocument& doc, std::string_view prefix) {
  const auto& known = system_param_keys();
  for (const auto& key : doc.keys()) {
    if (!key.starts_with(prefix)) continue;
    const auto field = std::string_view(key).substr(prefix.size());
    if (std::find(known.begin(), known.end(), field) == known.end()) throw UnknownKey(key);
  }
  const std::string p(prefix);
  SystemParams out;
  out.w_p = doc.number(p + "w_p");
  out.tau_1 = doc.number(p + "tau_1");
  out.tau_3 = doc.number(p + "tau_3");
  out.tau_sp = doc.number(p + "tau_sp");
  out.gamma_A = doc.number(p + "gamma_A");
  out.n_total = doc.number(p + "n_total");
  out.beta = doc.number(p + "beta");
  out.energies = energies_from_string(doc.at(p + "energies"), p + "energies");
  out.work_function = doc.number(p + "work_function");
  return out;
}

void append_params(KeyValueDocument& doc, const SystemParams& params, std::string_view prefix) {
  const std::string p(prefix);
  doc.set(p + "w_p", params.w_p);
  doc.set(p + "tau_1", params.tau_1);
  doc.set(p + "tau_3", params.tau_3);
  doc.set(p + "tau_sp", params.tau_sp);
  doc.set(p + "gamma_A", params.gamma_A);
  doc.set(p + "n_total", params.n_total);
  doc.set(p + "beta", params.beta);
  doc.set(p + "energies", energies_to_string(params.energies));
  doc.set(p + "work_function", params.work_function);
}

KeyValueDocument params_to_document(const SystemParams& params, std::string_view prefix) {
  KeyValueDocument doc;
  append_params(doc, params, prefix);
  return doc;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace auger
