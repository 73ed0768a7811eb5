#include "hypercount/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hypercount/error.hpp"

namespace hypercount {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::config, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '"') quoted = !quoted;
    if (s[j] == '#' && !quoted) return s.substr(0, j);
  }
  return s;
}

ConfigScalar parse_scalar(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty()) fail(line, "missing value");
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') fail(line, "unterminated string");
    const std::string_view body = text.substr(1, text.size() - 2);
    if (body.find('"') != std::string_view::npos) fail(line, "stray quote in string");
    return std::string(body);
  }
  if (text == "true") return true;
  if (text == "false") return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  std::int64_t i = 0;
  if (auto [ptr, ec] = std::from_chars(first, last, i); ec == std::errc() && ptr == last) return i;
  double d = 0;
  if (auto [ptr, ec] = std::from_chars(first, last, d); ec == std::errc() && ptr == last) return d;
  fail(line, "cannot read value '" + std::string(text) + "'");
}

ConfigValue parse_value(std::string_view text, std::size_t line) {
  text = trim(text);
  ConfigValue value;
  value.line = line;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') fail(line, "unterminated array");
    value.is_array = true;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    while (!body.empty()) {
      bool quoted = false;
      std::size_t j = 0;
      for (; j < body.size(); ++j) {
        if (body[j] == '"') quoted = !quoted;
        if (body[j] == ',' && !quoted) break;
      }
      value.items.push_back(parse_scalar(body.substr(0, j), line));
      body = j < body.size() ? trim(body.substr(j + 1)) : std::string_view{};
    }
    return value;
  }
  if (const auto dots = text.find(".."); dots != std::string_view::npos && text.front() != '"') {
    const auto lo = parse_scalar(text.substr(0, dots), line);
    const auto hi = parse_scalar(text.substr(dots + 2), line);
    if (!std::holds_alternative<std::int64_t>(lo) || !std::holds_alternative<std::int64_t>(hi)) {
      fail(line, "range bounds must be integers");
    }
    const auto a = std::get<std::int64_t>(lo);
    const auto b = std::get<std::int64_t>(hi);
    if (b < a || b - a > 1'000'000) fail(line, "bad integer range");
    value.is_array = true;
    for (auto x = a; x <= b; ++x) value.items.emplace_back(x);
    return value;
  }
  value.items.push_back(parse_scalar(text, line));
  return value;
}

double as_double(const ConfigScalar& s, const std::string& key, std::size_t line) {
  if (const auto* i = std::get_if<std::int64_t>(&s)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&s)) return *d;
  fail(line, "'" + key + "' must be a number");
}

std::int64_t as_int(const ConfigScalar& s, const std::string& key, std::size_t line) {
  if (const auto* i = std::get_if<std::int64_t>(&s)) return *i;
  fail(line, "'" + key + "' must be an integer");
}

std::string as_string(const ConfigScalar& s, const std::string& key, std::size_t line) {
  if (const auto* str = std::get_if<std::string>(&s)) return *str;
  fail(line, "'" + key + "' must be a string");
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  std::string table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string_view::npos) {
      if (line.back() != ']') fail(line_no, "unterminated table header");
      const auto name = trim(line.substr(1, line.size() - 2));
      if (!valid_key(name)) fail(line_no, "bad table name");
      table = std::string(name);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (!valid_key(key)) fail(line_no, "bad key '" + std::string(key) + "'");
    const std::string full = table.empty() ? std::string(key) : table + "." + std::string(key);
    if (cfg.values_.count(full)) fail(line_no, "duplicate key '" + full + "'");
    cfg.values_.emplace(full, parse_value(line.substr(eq + 1), line_no));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

void Config::require_known(const std::set<std::string>& allowed) const {
  for (const auto& [k, v] : values_)
    if (!allowed.count(k)) fail(v.line, "unknown key '" + k + "'");
}

const ConfigValue& Config::at(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw Error(ErrorKind::config, "missing key '" + key + "'");
  return it->second;
}

namespace {
const ConfigScalar& single(const ConfigValue& v, const std::string& key) {
  if (v.is_array || v.items.size() != 1) fail(v.line, "'" + key + "' must be a single value");
  return v.items.front();
}
}  // namespace

std::string Config::get_string(const std::string& key) const {
  const auto& v = at(key);
  return as_string(single(v, key), key, v.line);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double Config::get_double(const std::string& key) const {
  const auto& v = at(key);
  return as_double(single(v, key), key, v.line);
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::int64_t Config::get_int(const std::string& key) const {
  const auto& v = at(key);
  return as_int(single(v, key), key, v.line);
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = at(key);
  if (const auto* b = std::get_if<bool>(&single(v, key))) return *b;
  fail(v.line, "'" + key + "' must be true or false");
}

std::vector<double> Config::get_doubles(const std::string& key) const {
  const auto& v = at(key);
  std::vector<double> out;
  for (const auto& s : v.items) out.push_back(as_double(s, key, v.line));
  return out;
}

std::vector<std::int64_t> Config::get_ints(const std::string& key) const {
  const auto& v = at(key);
  std::vector<std::int64_t> out;
  for (const auto& s : v.items) out.push_back(as_int(s, key, v.line));
  return out;
}

std::vector<std::string> Config::get_strings(const std::string& key) const {
  const auto& v = at(key);
  std::vector<std::string> out;
  for (const auto& s : v.items) out.push_back(as_string(s, key, v.line));
  return out;
}

}  // namespace hypercount
