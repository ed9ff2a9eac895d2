#pragma once

#include <string>
#include <vector>

namespace fv {

/// One verified claim. `residual` and `tolerance` are relative unless the
/// statement says otherwise; a claim passes when residual <= tolerance.
struct Claim {
  std::string id;
  std::string statement;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  long runtime_ms = 0;
  std::string note;  // free-form details (tail estimates, observed constants)
};

struct Report {
  std::string suite;
  std::vector<Claim> claims;

  bool pass() const;
  void append(const Report& o);
};

/// Canonical JSON rendering. `config` is an optional JSON object embedded
/// verbatim for reproducibility; pass an empty string to omit it.
std::string report_json(const Report& r, const std::string& config = "");
/// CSV with one claim per row.
std::string report_csv(const Report& r);
/// Human-readable markdown table.
std::string report_markdown(const Report& r);

}  // namespace fv
