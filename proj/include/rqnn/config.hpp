#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rqnn {

// Flat key = value configuration. Lines starting with '#' and blank lines
// are ignored; whitespace around keys and values is trimmed. Later keys win.
struct KeyValues {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const;
  // Typed accessors: the one-argument forms throw std::invalid_argument on
  // a missing key or an unparsable value; the two-argument forms fall back.
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Comma-separated integer list.
  std::vector<long long> get_int_list(const std::string& key) const;
  std::vector<long long> get_int_list(const std::string& key,
                                      const std::vector<long long>& fallback) const;
};

KeyValues parse_config_text(const std::string& text);
KeyValues parse_config_file(const std::string& path);

// Every key of `over` replaces the matching key of `base`.
void merge_overrides(KeyValues& base, const KeyValues& over);

}  // namespace rqnn
