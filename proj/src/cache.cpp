#include "flagvert/cache.hpp"

#include <gmpxx.h>

#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flagvert/vertex.hpp"

namespace fv {
namespace {

constexpr const char* kMagic = "flagvert-series-v1";

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Scalar round-trip. Exact values serialize as "q:num/den" (bit-identical).
// Float values serialize as "f:" plus the full base-16 mantissa and exponent
// of the underlying float, which reproduces the stored bits at equal
// precision.
std::string encode_scalar(const Scalar& s, int precision) {
  if (s.is_exact()) return "q:" + s.str();
  mpf_class f = s.flt(precision);
  mp_exp_t exp;
  std::string mant = f.get_str(exp, 16, 0);
  std::ostringstream os;
  os << "f:" << exp << ":" << (mant.empty() ? "0" : mant);
  return os.str();
}

bool decode_scalar(const std::string& text, int precision, Scalar& out) {
  if (text.size() < 2 || text[1] != ':') return false;
  if (text[0] == 'q') {
    mpq_class r;
    if (r.set_str(text.substr(2), 10) != 0) return false;
    r.canonicalize();
    out = Scalar(r);
    return true;
  }
  if (text[0] != 'f') return false;
  size_t sep = text.find(':', 2);
  if (sep == std::string::npos) return false;
  long exp;
  try {
    exp = std::stol(text.substr(2, sep - 2));
  } catch (...) {
    return false;
  }
  std::string mant = text.substr(sep + 1);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant = mant.substr(1);
  for (char ch : mant)
    if (!std::isxdigit(static_cast<unsigned char>(ch))) return false;
  // value = +/- 0.mant * 16^exp in base 16, i.e. "0.<mant>@<exp>"
  std::ostringstream os;
  if (neg) os << "-";
  os << "0." << (mant.empty() ? "0" : mant) << "@" << exp;
  mpf_class f(0, bits_for_digits(precision));
  if (f.set_str(os.str(), 16) != 0) return false;
  out = Scalar(f);
  return true;
}

}  // namespace

SeriesCache SeriesCache::from_env() {
  const char* dir = std::getenv("FLAGVERT_CACHE_DIR");
  return SeriesCache(dir ? dir : "");
}

std::string SeriesCache::key(const std::string& recipe, const ParamSet& p) {
  return fnv1a_hex(recipe + "\n" + p.to_toml());
}

bool SeriesCache::load(const std::string& key, const ParamSet& p, TruncatedSeries& out) const {
  if (!enabled()) return false;
  std::filesystem::path path = std::filesystem::path(dir_) / (key + ".series");
  std::ifstream in(path);
  if (!in) return false;
  auto corrupt = [&]() {
    std::cerr << "flagvert: warning: discarding corrupt cache entry " << path.string()
              << " (recomputing)\n";
    in.close();
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return false;
  };
  std::string magic, k;
  if (!std::getline(in, magic) || magic != kMagic) return corrupt();
  if (!std::getline(in, k) || k != key) return corrupt();
  int nvars, cap;
  long count;
  if (!(in >> nvars >> cap >> count) || nvars < 0 || cap < 0 || count < 0) return corrupt();
  TruncatedSeries s(nvars, cap);
  for (long i = 0; i < count; ++i) {
    std::vector<int> deg(nvars);
    for (int& d : deg)
      if (!(in >> d)) return corrupt();
    std::string enc;
    if (!(in >> enc)) return corrupt();
    Scalar v;
    if (!decode_scalar(enc, p.precision, v)) return corrupt();
    s.c[deg] = v;
  }
  std::string sentinel;
  if (!(in >> sentinel) || sentinel != "end") return corrupt();
  out = std::move(s);
  return true;
}

void SeriesCache::store(const std::string& key, const ParamSet& p,
                        const TruncatedSeries& s) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  std::filesystem::path path = std::filesystem::path(dir_) / (key + ".series");
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kMagic << "\n" << key << "\n";
    out << s.nvars << " " << s.cap << " " << s.c.size() << "\n";
    for (const auto& [deg, v] : s.c) {
      for (int d : deg) out << d << " ";
      out << encode_scalar(v, p.precision) << "\n";
    }
    out << "end\n";
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

TruncatedSeries cached_vertex_series(const Perm& I, const ParamSet& p, const SeriesCache& cache) {
  std::string k = SeriesCache::key("vertex/" + I.str(), p);
  TruncatedSeries s;
  if (cache.load(k, p, s)) return s;
  s = vertex_series(I, p);
  cache.store(k, p, s);
  return s;
}

}  // namespace fv
