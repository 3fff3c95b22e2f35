#include "rqnn/config.hpp"

#include <cstdlib>
#include <stdexcept>

#include "rqnn/csv.hpp"

namespace rqnn {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_key(const std::string& key, const char* what) {
  throw std::invalid_argument("config key '" + key + "': " + what);
}

long long parse_int(const std::string& key, const std::string& raw) {
  char* end = nullptr;
  const long long v = std::strtoll(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0') bad_key(key, "not an integer");
  return v;
}

double parse_double(const std::string& key, const std::string& raw) {
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (end == raw.c_str() || *end != '\0') bad_key(key, "not a number");
  return v;
}

}  // namespace

bool KeyValues::has(const std::string& key) const {
  return values.find(key) != values.end();
}

std::string KeyValues::get_string(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) bad_key(key, "missing");
  return it->second;
}

std::string KeyValues::get_string(const std::string& key,
                                  const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

long long KeyValues::get_int(const std::string& key) const {
  return parse_int(key, get_string(key));
}

long long KeyValues::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t KeyValues::get_u64(const std::string& key) const {
  const std::string raw = get_string(key);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw.c_str(), &end, 10);
  if (end == raw.c_str() || *end != '\0') bad_key(key, "not an unsigned integer");
  return v;
}

std::uint64_t KeyValues::get_u64(const std::string& key,
                                 std::uint64_t fallback) const {
  return has(key) ? get_u64(key) : fallback;
}

double KeyValues::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double KeyValues::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

bool KeyValues::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string raw = get_string(key);
  if (raw == "true" || raw == "1" || raw == "yes") return true;
  if (raw == "false" || raw == "0" || raw == "no") return false;
  bad_key(key, "not a boolean");
}

std::vector<long long> KeyValues::get_int_list(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    std::size_t comma = raw.find(',', pos);
    if (comma == std::string::npos) comma = raw.size();
    const std::string item = trim(raw.substr(pos, comma - pos));
    if (!item.empty()) out.push_back(parse_int(key, item));
    pos = comma + 1;
  }
  if (out.empty()) bad_key(key, "empty list");
  return out;
}

std::vector<long long> KeyValues::get_int_list(
    const std::string& key, const std::vector<long long>& fallback) const {
  return has(key) ? get_int_list(key) : fallback;
}

KeyValues parse_config_text(const std::string& text) {
  KeyValues kv;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    const std::string line = trim(text.substr(pos, nl - pos));
    line_no += 1;
    pos = nl + 1;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    kv.values[key] = value;
  }
  return kv;
}

KeyValues parse_config_file(const std::string& path) {
  return parse_config_text(read_text_file(path));
}

void merge_overrides(KeyValues& base, const KeyValues& over) {
  for (const auto& [k, v] : over.values) base.values[k] = v;
}

}  // namespace rqnn
