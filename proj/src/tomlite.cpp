#include "flagvert/tomlite.hpp"

#include <sstream>

#include "flagvert/errors.hpp"

namespace fv::tomlite {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s, int line_no) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"')
    throw ConfigError("line " + std::to_string(line_no) + ": expected quoted string, got '" + s + "'");
  return s.substr(1, s.size() - 2);
}

}  // namespace

bool Doc::has(const std::string& k) const {
  return strings.count(k) || integers.count(k) || arrays.count(k);
}

std::string Doc::get_string(const std::string& k) const {
  auto it = strings.find(k);
  if (it == strings.end()) throw ConfigError("missing key '" + k + "'");
  return it->second;
}

long Doc::get_int(const std::string& k, long fallback) const {
  auto it = integers.find(k);
  return it == integers.end() ? fallback : it->second;
}

const std::vector<std::string>& Doc::get_array(const std::string& k) const {
  auto it = arrays.find(k);
  if (it == arrays.end()) throw ConfigError("missing array '" + k + "'");
  return it->second;
}

Doc parse(const std::string& text) {
  Doc doc;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    std::string full = section.empty() ? key : section + "." + key;
    if (val.front() == '[') {
      if (val.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated array");
      std::vector<std::string> items;
      std::string body = val.substr(1, val.size() - 2);
      size_t pos = 0;
      while (pos < body.size()) {
        auto comma = body.find(',', pos);
        std::string item = trim(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!item.empty()) items.push_back(unquote(item, line_no));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      doc.arrays[full] = std::move(items);
    } else if (val.front() == '"') {
      doc.strings[full] = unquote(val, line_no);
    } else {
      try {
        doc.integers[full] = std::stol(val);
      } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line_no) + ": unparsable value '" + val + "'");
      }
    }
  }
  return doc;
}

}  // namespace fv::tomlite
