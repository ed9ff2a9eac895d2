#include "flagvert/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fv {

bool Report::pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

void Report::append(const Report& o) {
  claims.insert(claims.end(), o.claims.begin(), o.claims.end());
}

std::string report_json(const Report& r, const std::string& config) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["claims"] = nlohmann::json::array();
  for (const auto& c : r.claims) {
    nlohmann::json cj;
    cj["claim_id"] = c.id;
    cj["statement"] = c.statement;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    cj["runtime_ms"] = c.runtime_ms;
    if (!c.note.empty()) cj["note"] = c.note;
    j["claims"].push_back(std::move(cj));
  }
  if (!config.empty()) j["config"] = nlohmann::json::parse(config);
  return j.dump(2);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "claim_id,statement,residual,tolerance,pass,runtime_ms\n";
  for (const auto& c : r.claims) {
    os << csv_escape(c.id) << ',' << csv_escape(c.statement) << ',' << c.residual << ','
       << c.tolerance << ',' << (c.pass ? "true" : "false") << ',' << c.runtime_ms << '\n';
  }
  return os.str();
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "## " << r.suite << "\n\n";
  os << "| claim | residual | tolerance | pass |\n|---|---|---|---|\n";
  for (const auto& c : r.claims) {
    os << "| " << c.id << " | " << c.residual << " | " << c.tolerance << " | "
       << (c.pass ? "yes" : "no") << " |\n";
  }
  return os.str();
}

}  // namespace fv
