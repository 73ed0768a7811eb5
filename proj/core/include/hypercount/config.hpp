#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hypercount {

using ConfigScalar = std::variant<bool, std::int64_t, double, std::string>;

struct ConfigValue {
  std::vector<ConfigScalar> items;  // one item unless is_array
  bool is_array = false;
  std::size_t line = 0;
};

/// Plain-text experiment configuration.
///
///   # comment
///   name = "sweep"             strings are double-quoted
///   n = [40, 60, 80]           arrays of scalars
///   seeds = 1..10              inclusive integer range, read as an array
///   [host]                     later keys are stored as "host.<key>"
///   p = 0.25
///   exact = true
///
/// Keys are [A-Za-z0-9_-]+. Duplicate keys and malformed lines throw
/// Error(config) with the line number.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::vector<std::string> keys() const;

  /// Throws Error(config) naming the first key not in `allowed`.
  void require_known(const std::set<std::string>& allowed) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  /// Scalars are accepted as one-element lists.
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<std::int64_t> get_ints(const std::string& key) const;
  std::vector<std::string> get_strings(const std::string& key) const;

 private:
  const ConfigValue& at(const std::string& key) const;
  std::map<std::string, ConfigValue> values_;
};

}  // namespace hypercount
