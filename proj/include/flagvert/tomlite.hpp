#pragma once

#include <map>
#include <string>
#include <vector>

namespace fv::tomlite {

/// Minimal TOML-subset document: [section] headers, `key = value` lines with
/// integer, quoted-string, or array-of-quoted-string values, and # comments.
/// Keys are stored as "section.key" ("" section for the top level).
struct Doc {
  std::map<std::string, std::string> strings;
  std::map<std::string, long> integers;
  std::map<std::string, std::vector<std::string>> arrays;

  bool has(const std::string& k) const;
  std::string get_string(const std::string& k) const;
  long get_int(const std::string& k, long fallback) const;
  const std::vector<std::string>& get_array(const std::string& k) const;
};

Doc parse(const std::string& text);

}  // namespace fv::tomlite
