#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "flagvert/cache.hpp"
#include "flagvert/degrees.hpp"
#include "flagvert/envelope.hpp"
#include "flagvert/macdonald.hpp"
#include "flagvert/mirror.hpp"
#include "flagvert/params.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/qseries.hpp"
#include "flagvert/report.hpp"
#include "flagvert/series.hpp"
#include "flagvert/tomlite.hpp"
#include "flagvert/vertex.hpp"

using namespace fv;

namespace {
double rel(const Scalar& a, const Scalar& b) {
  Scalar den = a.abs() + b.abs();
  if (den.is_zero()) return 0.0;
  return ((a - b).abs() / den).to_double();
}
}  // namespace

TEST_CASE("pochhammer composition") {
  Scalar q = Scalar::exact(1, 97);
  Scalar x = Scalar::exact(3, 7);
  for (long d = -5; d <= 5; ++d)
    for (long e = -5; e <= 5; ++e) {
      Scalar lhs = pochhammer(x, q, d) * pochhammer(x * q.pow(d), q, e);
      CHECK(lhs == pochhammer(x, q, d + e));
    }
}

TEST_CASE("theta oddness and quasi-periodicity") {
  // q = s^2 so that sqrt(q) is exact
  Scalar s = Scalar::exact(1, 10);
  Scalar q2 = s * s;
  std::uint64_t st = 12345;
  for (int i = 0; i < 100; ++i) {
    st ^= st << 13;
    st ^= st >> 7;
    st ^= st << 17;
    Scalar sx = Scalar::exact(100 + static_cast<long>(st % 900), 300);
    // oddness: theta(1/x) = -theta(x), exact at every truncation order
    CHECK(theta_sqrt(sx.inv(), q2, 25) == -theta_sqrt(sx, q2, 25));
    // quasi-periodicity: theta(q x) = -theta(x)/(sqrt(q) x)
    Scalar lhs = theta_sqrt(sx * s, q2, 60);
    Scalar rhs = -theta_sqrt(sx, q2, 60) / (s * sx * sx);
    CHECK(rel(lhs, rhs) < 1e-55);
  }
}

TEST_CASE("admissibility matches brute force") {
  for (int n = 2; n <= 4; ++n) {
    // every ragged matrix with entries in 0..2
    std::vector<int> flat;
    int cells = n * (n - 1) / 2;
    flat.assign(cells, 0);
    bool done = false;
    while (!done) {
      DegreeMatrix m = DegreeMatrix::zero(n);
      int idx = 0;
      for (auto& row : m.d)
        for (int& e : row) e = flat[idx++];
      CHECK(admissible(m) == admissible_bruteforce(m));
      int k = 0;
      while (k < cells && flat[k] == 2) flat[k++] = 0;
      if (k == cells)
        done = true;
      else
        ++flat[k];
    }
  }
}

TEST_CASE("precedes is the cumulative-set partial order") {
  Perm a = Perm::parse("1 2 3");
  Perm b = Perm::parse("2 1 3");
  Perm c = Perm::parse("3 2 1");
  CHECK(precedes(a, b));
  CHECK(precedes(b, c));
  CHECK(precedes(a, c));
  CHECK_FALSE(precedes(b, a));
  CHECK_FALSE(preceq(Perm::parse("2 3 1"), Perm::parse("3 1 2")));
  CHECK_FALSE(preceq(Perm::parse("3 1 2"), Perm::parse("2 3 1")));
}

TEST_CASE("rank-two vertex matches the closed form") {
  ParamSet p = sample_params(2, 11, 30, 6, Backend::Exact);
  Perm I = Perm::parse("2 1");
  TruncatedSeries v = vertex_series(I, p);
  Scalar aa = p.u[I[2] - 1] / p.u[I[1] - 1];
  for (int d = 0; d <= 6; ++d) {
    Scalar expect = pochhammer(p.hbar, p.q, d) / pochhammer(p.q, p.q, d) *
                    pochhammer(p.hbar * aa, p.q, d) / pochhammer(p.q * aa, p.q, d);
    CHECK(v.coeff({d}) == expect);
  }
}

TEST_CASE("dual chart is an involution") {
  ParamSet p = sample_params(3, 5, 30, 4, Backend::Exact);
  ParamSet pd = kappa(kappa(p));
  CHECK(p.g_hbar == pd.g_hbar);
  CHECK(p.g_u == pd.g_u);
  CHECK(p.g_zeta == pd.g_zeta);
  // single application reads hbar as q/hbar
  ParamSet d1 = kappa(p);
  CHECK(d1.hbar == p.q / p.hbar);
}

TEST_CASE("fixed point pairing is the inverse permutation") {
  CHECK(dual_fixed_point(Perm::parse("2 3 1")) == Perm::parse("3 1 2"));
  for (const Perm& I : all_perms(4)) CHECK(dual_fixed_point(dual_fixed_point(I)) == I);
}

TEST_CASE("elementary symmetric polynomials match Vieta expansion") {
  std::vector<Scalar> x = {Scalar::exact(2, 3), Scalar::exact(5, 7), Scalar::exact(-3, 4),
                           Scalar::exact(9, 2)};
  for (int r = 0; r <= 4; ++r)
    CHECK(elementary_symmetric(x, r) == elementary_symmetric_vieta(x, r));
}

TEST_CASE("series cache round trip and invalidation") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "flagvert-test-cache";
  std::filesystem::remove_all(dir);
  SeriesCache cache(dir.string());
  ParamSet p = sample_params(2, 7, 20, 4, Backend::Exact);
  Perm I = Perm::parse("1 2");

  TruncatedSeries a = cached_vertex_series(I, p, cache);
  TruncatedSeries b = cached_vertex_series(I, p, cache);
  REQUIRE(a.c.size() == b.c.size());
  for (const auto& [deg, v] : a.c) {
    CHECK(v.is_exact());
    CHECK(v == b.c.at(deg));  // bit-identical rationals
  }

  // changing N changes the key
  CHECK(SeriesCache::key("vertex/1 2", p) != SeriesCache::key("vertex/1 2", p.with_theta_terms(30)));
  // changing D changes the key
  CHECK(SeriesCache::key("vertex/1 2", p) != SeriesCache::key("vertex/1 2", p.with_max_degree(5)));
  // recipe id is part of the key
  CHECK(SeriesCache::key("vertex/1 2", p) != SeriesCache::key("vertex/2 1", p));

  // corrupt entry is discarded and recomputed
  std::string k = SeriesCache::key("vertex/1 2", p);
  {
    std::ofstream f(dir / (k + ".series"));
    f << "not a cache entry\n";
  }
  TruncatedSeries g = cached_vertex_series(I, p, cache);
  for (const auto& [deg, v] : a.c) CHECK(v == g.c.at(deg));

  // disabled cache computes without touching disk
  SeriesCache off;
  CHECK_FALSE(off.enabled());
  TruncatedSeries h = cached_vertex_series(I, p, off);
  for (const auto& [deg, v] : a.c) CHECK(v == h.c.at(deg));
  std::filesystem::remove_all(dir);
}

TEST_CASE("float cache entries round trip at working precision") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "flagvert-test-cache-f";
  std::filesystem::remove_all(dir);
  SeriesCache cache(dir.string());
  ParamSet p = sample_params(2, 7, 20, 4, Backend::Float, 100);
  Perm I = Perm::parse("2 1");
  TruncatedSeries a = cached_vertex_series(I, p, cache);
  TruncatedSeries b = cached_vertex_series(I, p, cache);
  for (const auto& [deg, v] : a.c) CHECK(rel(v, b.c.at(deg)) < 1e-95);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report renders in all three formats") {
  Report r;
  r.suite = "demo";
  r.claims.push_back({"demo/a", "first", 1e-20, 1e-10, true, 3, ""});
  r.claims.push_back({"demo/b", "second", 2.0, 1e-10, false, 4, "details"});
  CHECK_FALSE(r.pass());
  std::string j = report_json(r, "{\"n\":2}");
  CHECK(j.find("\"claim_id\"") != std::string::npos);
  CHECK(j.find("demo/b") != std::string::npos);
  CHECK(j.find("\"config\"") != std::string::npos);
  std::string c = report_csv(r);
  CHECK(c.find("demo/a") != std::string::npos);
  std::string m = report_markdown(r);
  CHECK(m.find("demo/b") != std::string::npos);
}

TEST_CASE("toml subset parser") {
  tomlite::Doc d = tomlite::parse("n = 3\nbackend = \"exact\"\n[run]\nseed = 9\n# comment\n");
  CHECK(d.get_int("n", 0) == 3);
  CHECK(d.get_string("backend") == "exact");
  CHECK(d.get_int("run.seed", 0) == 9);
}

TEST_CASE("paramset toml round trip is exact") {
  ParamSet p = sample_params(3, 13, 25, 3, Backend::Exact);
  ParamSet r = ParamSet::from_toml(p.to_toml());
  CHECK(r.n == p.n);
  CHECK(r.g_q == p.g_q);
  CHECK(r.g_hbar == p.g_hbar);
  CHECK(r.g_u == p.g_u);
  CHECK(r.g_zeta == p.g_zeta);
  CHECK(r.theta_terms == p.theta_terms);
  CHECK(r.max_degree == p.max_degree);
}
