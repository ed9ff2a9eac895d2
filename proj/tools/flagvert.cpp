// flagvert: compute vertex functions, stable-envelope restriction matrices,
// and chamber limits for the cotangent bundle of the full flag variety, and
// run the numerical verification suites.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 configuration
// or parameter error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "flagvert/cache.hpp"
#include "flagvert/envelope.hpp"
#include "flagvert/errors.hpp"
#include "flagvert/mirror.hpp"
#include "flagvert/params.hpp"
#include "flagvert/report.hpp"
#include "flagvert/tomlite.hpp"
#include "flagvert/verify.hpp"
#include "flagvert/vertex.hpp"

namespace {

struct RunConfig {
  std::string subcommand;
  std::string target;  // verify suite or compute object
  int n = 2;
  std::uint64_t seed = 7;
  int degree = 0;  // 0 = per-suite default
  int theta_terms = 40;
  int precision = 120;
  std::string backend = "float";
  std::string perm;
  std::string form = "stab";
  std::string output;  // empty = stdout
  std::string format = "json";
  std::string config_file;
  bool no_cache = false;

  std::string json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["target"] = target;
    j["n"] = n;
    j["seed"] = seed;
    j["degree"] = degree;
    j["theta_terms"] = theta_terms;
    j["precision"] = precision;
    j["backend"] = backend;
    if (!perm.empty()) j["perm"] = perm;
    j["form"] = form;
    j["format"] = format;
    return j.dump();
  }
};

// The config file, when given, overrides command-line flags.
void apply_config_file(RunConfig& rc) {
  if (rc.config_file.empty()) return;
  std::ifstream in(rc.config_file);
  if (!in) throw fv::ConfigError("cannot open config file: " + rc.config_file);
  std::stringstream ss;
  ss << in.rdbuf();
  fv::tomlite::Doc doc = fv::tomlite::parse(ss.str());
  rc.n = static_cast<int>(doc.get_int("n", rc.n));
  rc.seed = static_cast<std::uint64_t>(doc.get_int("seed", static_cast<long>(rc.seed)));
  rc.degree = static_cast<int>(doc.get_int("degree", rc.degree));
  rc.theta_terms = static_cast<int>(doc.get_int("theta_terms", rc.theta_terms));
  rc.precision = static_cast<int>(doc.get_int("precision", rc.precision));
  if (doc.has("backend")) rc.backend = doc.get_string("backend");
  if (doc.has("perm")) rc.perm = doc.get_string("perm");
  if (doc.has("form")) rc.form = doc.get_string("form");
  if (doc.has("output")) rc.output = doc.get_string("output");
  if (doc.has("format")) rc.format = doc.get_string("format");
}

fv::Backend parse_backend(const std::string& b) {
  if (b == "exact") return fv::Backend::Exact;
  if (b == "float") return fv::Backend::Float;
  throw fv::ConfigError("unknown backend: " + b + " (expected exact|float)");
}

fv::StabNorm parse_form(const std::string& f) {
  if (f == "raw") return fv::StabNorm::Raw;
  if (f == "stab") return fv::StabNorm::Stab;
  if (f == "s") return fv::StabNorm::S;
  if (f == "bold") return fv::StabNorm::Bold;
  if (f == "overline") return fv::StabNorm::Overline;
  if (f == "a") return fv::StabNorm::A;
  throw fv::ConfigError("unknown form: " + f);
}

void check_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "markdown")
    throw fv::ConfigError("unknown format: " + f + " (expected json|csv|markdown)");
}

fv::ParamSet make_params(const RunConfig& rc, int degree) {
  if (rc.n < 2 || rc.n > 6) throw fv::ConfigError("n must be in 2..6");
  if (rc.theta_terms < 3) throw fv::ConfigError("theta-terms must be >= 3");
  return fv::sample_params(rc.n, rc.seed, rc.theta_terms, degree, parse_backend(rc.backend),
                           rc.precision);
}

// Atomic write: temp file in the same directory, then rename.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw fv::ConfigError("cannot write output file: " + path);
    out << text;
  }
  std::filesystem::rename(tmp, target);
}

fv::Perm parse_perm_arg(const RunConfig& rc) {
  if (rc.perm.empty()) throw fv::ConfigError("--perm is required for this subcommand");
  fv::Perm I = fv::Perm::parse(rc.perm);
  if (static_cast<int>(I.v.size()) != rc.n)
    throw fv::ConfigError("--perm length does not match --n");
  return I;
}

std::string render_series(const fv::TruncatedSeries& s, const RunConfig& rc) {
  std::ostringstream os;
  if (rc.format == "json") {
    nlohmann::json j;
    j["config"] = nlohmann::json::parse(rc.json());
    j["nvars"] = s.nvars;
    j["cap"] = s.cap;
    auto rows = nlohmann::json::array();
    for (const auto& [deg, v] : s.c) {
      nlohmann::json row;
      row["degree"] = deg;
      row["coefficient"] = v.str();
      rows.push_back(row);
    }
    j["coefficients"] = rows;
    os << j.dump(2) << "\n";
  } else if (rc.format == "csv") {
    for (const auto& [deg, v] : s.c) {
      for (int d : deg) os << d << ",";
      os << v.str() << "\n";
    }
  } else {
    os << "| degree | coefficient |\n|---|---|\n";
    for (const auto& [deg, v] : s.c) {
      os << "| ";
      for (size_t i = 0; i < deg.size(); ++i) os << deg[i] << (i + 1 < deg.size() ? " " : "");
      os << " | " << v.sci() << " |\n";
    }
  }
  return os.str();
}

std::string render_matrix(const fv::StabMatrix& m, const RunConfig& rc) {
  std::ostringstream os;
  if (rc.format == "json") {
    nlohmann::json j;
    j["config"] = nlohmann::json::parse(rc.json());
    auto rows = nlohmann::json::array();
    for (size_t i = 0; i < m.order.size(); ++i)
      for (size_t k = 0; k < m.order.size(); ++k) {
        nlohmann::json row;
        row["I"] = m.order[i].str();
        row["J"] = m.order[k].str();
        row["entry"] = m.m[i][k].str();
        rows.push_back(row);
      }
    j["entries"] = rows;
    os << j.dump(2) << "\n";
  } else if (rc.format == "csv") {
    for (size_t i = 0; i < m.order.size(); ++i)
      for (size_t k = 0; k < m.order.size(); ++k)
        os << "\"" << m.order[i].str() << "\",\"" << m.order[k].str() << "\"," << m.m[i][k].str()
           << "\n";
  } else {
    os << "| I | J | entry |\n|---|---|---|\n";
    for (size_t i = 0; i < m.order.size(); ++i)
      for (size_t k = 0; k < m.order.size(); ++k)
        os << "| " << m.order[i].str() << " | " << m.order[k].str() << " | " << m.m[i][k].sci()
           << " |\n";
  }
  return os.str();
}

int default_degree(const RunConfig& rc, const std::string& suite) {
  if (rc.degree > 0) return rc.degree;
  if (suite == "mirror") return rc.n == 2 ? 8 : 5;
  if (suite == "macdonald") return rc.n == 2 ? 6 : 4;
  if (suite == "limits") return rc.n == 2 ? 6 : 4;
  return 6;
}

fv::Report run_suite(const RunConfig& rc, const std::string& suite) {
  fv::Report rep;
  rep.suite = suite;
  fv::ParamSet p = make_params(rc, default_degree(rc, suite));
  if (suite == "triangularity") return fv::verify_triangularity(p);
  if (suite == "diagonal") return fv::verify_diagonal(p);
  if (suite == "quasiperiodicity") return fv::verify_quasiperiodicity(p, rc.seed + 0x51ab);
  if (suite == "macdonald") return fv::verify_macdonald(p);
  if (suite == "stab-inverse") return fv::verify_stab_inverse(p);
  if (suite == "oracles") return fv::verify_oracles(p);
  if (suite == "mirror") {
    for (const fv::Perm& I : fv::all_perms(p.n)) {
      rep.append(fv::verify_main_theorem(I, p, fv::TheoremForm::Overline));
      rep.append(fv::verify_main_theorem(I, p, fv::TheoremForm::Bold));
    }
    rep.suite = suite;
    return rep;
  }
  if (suite == "limits") {
    for (const fv::Perm& I : fv::all_perms(p.n)) rep.append(fv::verify_limits(I, p));
    rep.suite = suite;
    return rep;
  }
  throw fv::ConfigError("unknown verify suite: " + suite);
}

int run_verify(const RunConfig& rc) {
  fv::Report all;
  all.suite = rc.target;
  if (rc.target == "all") {
    for (const char* s : {"triangularity", "diagonal", "quasiperiodicity", "macdonald", "mirror",
                          "stab-inverse", "limits", "oracles"})
      all.append(run_suite(rc, s));
  } else {
    all = run_suite(rc, rc.target);
  }
  std::string text;
  if (rc.format == "json")
    text = fv::report_json(all, rc.json());
  else if (rc.format == "csv")
    text = fv::report_csv(all);
  else
    text = fv::report_markdown(all);
  write_output(rc.output, text);
  if (!rc.output.empty()) {
    int passed = 0;
    for (const auto& c : all.claims) passed += c.pass ? 1 : 0;
    std::cerr << "flagvert: " << passed << "/" << all.claims.size() << " claims passed, report in "
              << rc.output << "\n";
  }
  return all.pass() ? 0 : 1;
}

int run_compute(const RunConfig& rc) {
  fv::SeriesCache cache = rc.no_cache ? fv::SeriesCache() : fv::SeriesCache::from_env();
  int degree = rc.degree > 0 ? rc.degree : 4;
  if (rc.target == "vertex") {
    fv::ParamSet p = make_params(rc, degree);
    fv::Perm I = parse_perm_arg(rc);
    write_output(rc.output, render_series(fv::cached_vertex_series(I, p, cache), rc));
    return 0;
  }
  if (rc.target == "limit") {
    fv::ParamSet p = make_params(rc, degree);
    fv::Perm I = parse_perm_arg(rc);
    write_output(rc.output, render_series(fv::vertex_limit(I, p), rc));
    return 0;
  }
  if (rc.target == "stab") {
    fv::ParamSet p = make_params(rc, degree);
    write_output(rc.output, render_matrix(fv::stab_matrix(p, parse_form(rc.form)), rc));
    return 0;
  }
  throw fv::ConfigError("unknown compute object: " + rc.target);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  CLI::App app{"vertex functions, elliptic stable envelopes, and Macdonald operators "
               "for the cotangent bundle of the full flag variety"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", rc.n, "rank (number of flags), 2..6");
    cmd->add_option("--seed", rc.seed, "parameter sampling seed");
    cmd->add_option("--degree", rc.degree, "per-variable series degree cap D (0 = suite default)");
    cmd->add_option("--theta-terms", rc.theta_terms, "factors N kept in truncated products");
    cmd->add_option("--precision", rc.precision, "float backend precision in decimal digits");
    cmd->add_option("--backend", rc.backend, "exact|float");
    cmd->add_option("--output", rc.output, "output file (default stdout), written atomically");
    cmd->add_option("--format", rc.format, "json|csv|markdown");
    cmd->add_option("--config", rc.config_file, "TOML config file; its values override flags");
    cmd->add_flag("--no-cache", rc.no_cache, "ignore the series cache");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute an object and print it");
  for (const char* obj : {"vertex", "stab", "limit"}) {
    CLI::App* c = compute->add_subcommand(obj);
    add_common(c);
    c->add_option("--perm", rc.perm, "fixed point as a permutation, e.g. \"2 1 3\"");
    c->add_option("--form", rc.form, "matrix normalization: raw|stab|s|bold|overline|a");
    c->callback([&rc, obj]() {
      rc.subcommand = "compute";
      rc.target = obj;
    });
  }
  compute->require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  for (const char* suite : {"triangularity", "diagonal", "quasiperiodicity", "macdonald", "mirror",
                            "stab-inverse", "limits", "oracles", "all"}) {
    CLI::App* v = verify->add_subcommand(suite);
    add_common(v);
    v->callback([&rc, suite]() {
      rc.subcommand = "verify";
      rc.target = suite;
    });
  }
  verify->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    apply_config_file(rc);
    check_format(rc.format);
    parse_backend(rc.backend);
    if (rc.subcommand == "verify") return run_verify(rc);
    return run_compute(rc);
  } catch (const fv::ConfigError& e) {
    std::cerr << "flagvert: config error: " << e.what() << "\n";
    return 2;
  } catch (const fv::Error& e) {
    std::cerr << "flagvert: parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "flagvert: error: " << e.what() << "\n";
    return 2;
  }
}
