#include "flagvert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "flagvert/degrees.hpp"
#include "flagvert/envelope.hpp"
#include "flagvert/macdonald.hpp"
#include "flagvert/mirror.hpp"
#include "flagvert/qseries.hpp"
#include "flagvert/vertex.hpp"

namespace fv {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Claim make_claim(std::string id, std::string statement, double residual, double tolerance,
                 Clock::time_point t0, std::string note = "") {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  c.runtime_ms = ms_since(t0);
  c.note = std::move(note);
  return c;
}

/// xorshift64* stream of rationals in roughly [1/5, 5], deterministic.
struct RatStream {
  std::uint64_t s;
  explicit RatStream(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545f4914f6cdd1dULL;
  }
  mpq_class rat() {
    long num = 1000 + static_cast<long>(next() % 9000);
    long den = 1000 + static_cast<long>(next() % 9000);
    return mpq_class(num, den);
  }
};

// --- companion theta product for the transformation-law check -------------

// The normalized weight function transforms, under a q-shift of any single
// chern root, equivariant parameter, Kaehler parameter, or the coupling
// parameter, exactly like a formal product of odd theta functions whose
// arguments are monomials in those variables.  Each entry is an (argument,
// multiplicity) pair of that formal product.  The product itself may contain
// theta(1) = 0 factors; only its transformation law is ever used, never its
// value.
std::vector<std::pair<Sq, int>> companion_thetas(const Perm& I, const WeightFnParams& wp) {
  int n = wp.n;
  std::vector<std::pair<Sq, int>> f;
  // Chart: chern roots x^{(k)}_a are inverse to the auxiliary variables, the
  // top level holds the equivariant parameters, and the Kaehler parameters
  // are recovered from consecutive twist ratios.
  auto x = [&](int k, int a) { return wp.t[k - 1][a - 1].inv(); };
  auto z = [&](int k) { return wp.mu[k - 1] / (wp.hbar * wp.mu[k]); };
  f.push_back({wp.hbar, I.non_inversions()});
  // theta of the polarization class
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) {
      for (int k = 1; k <= i + 1; ++k) f.push_back({x(i + 1, k) / x(i, j), 1});
      for (int k = 1; k <= i; ++k) f.push_back({x(i, k) / x(i, j), -1});
    }
  // determinant of the repelling half of the polarization at the fixed point
  Sq det;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      if (I[j] < I[k]) det = det * (x(n, I[k]) / x(n, I[j]));
  f.push_back({wp.hbar.inv(), 1});
  f.push_back({det, 1});
  f.push_back({wp.hbar.inv() * det, -1});
  // tautological determinant line bundles, off and on the fixed point
  for (int k = 1; k <= n - 1; ++k) {
    Sq L, LI;
    for (int j = 1; j <= k; ++j) {
      L = L * x(k, j);
      LI = LI * x(n, I[j]);
    }
    f.push_back({z(k) * L, 1});
    f.push_back({z(k), -1});
    f.push_back({L, -1});
    f.push_back({LI, 1});
    f.push_back({z(k), 1});
    f.push_back({LI * z(k), -1});
  }
  return f;
}

// Analytic factor the companion product acquires when the parameters move
// from `base` to `sh`, assuming every theta argument is rescaled by an exact
// integer power of q: theta(q^e y) = (-1)^e q^{-e^2/2} y^-e theta(y).
Scalar companion_factor(const Perm& I, const WeightFnParams& base, const WeightFnParams& sh,
                        const ParamSet& p) {
  auto fb = companion_thetas(I, base);
  auto fs = companion_thetas(I, sh);
  double lq = std::log(std::abs(p.q.to_double()));
  Scalar acc(1);
  for (size_t i = 0; i < fb.size(); ++i) {
    if (fb[i].second == 0) continue;
    Scalar ratio = fs[i].first.val() / fb[i].first.val();
    long e = std::lround(std::log(std::abs(ratio.to_double())) / lq);
    if (e == 0) continue;
    Scalar one = p.sqrt_q.pow(-e * e) * fb[i].first.val().pow(-e);
    if (e % 2 != 0) one = Scalar(0) - one;
    acc = acc * one.pow(fb[i].second);
  }
  return acc;
}

// Value of the normalized weight function at a full set of auxiliary
// variables (the weight function divided by the diagonal-pairing product).
Scalar normalized_weight(const Perm& I, const WeightFnParams& wp, const ParamSet& p) {
  SqThetaCtx ctx(p);
  return weight_W(I, wp, ctx) / weight_E(wp, ctx);
}

// --- shared residual helpers ----------------------------------------------

double rel_diff(const Scalar& a, const Scalar& b) {
  Scalar scale = a.abs() + b.abs();
  if (scale.is_zero()) return 0.0;
  return ((a - b).abs() / scale).to_double() * 2.0;
}

double series_residual(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  Scalar scale(0);
  for (const auto& [deg, v] : rhs.c)
    if (v.abs() > scale) scale = v.abs();
  if (scale.is_zero()) scale = Scalar(1);
  Scalar worst(0);
  for (const auto& [deg, v] : rhs.c) {
    Scalar d = (lhs.coeff(deg) - v).abs();
    if (d > worst) worst = d;
  }
  return (worst / scale).to_double();
}

}  // namespace

Report verify_triangularity(const ParamSet& p) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "triangularity";
  SqThetaCtx ctx(p);
  auto perms = all_perms(p.n);
  double worst = 0;
  int forbidden = 0;
  for (const Perm& I : perms) {
    std::vector<Scalar> row;
    Scalar rowmax(0);
    for (const Perm& J : perms) {
      row.push_back(restrict_weight(I, J, p, ctx));
      if (row.back().abs() > rowmax) rowmax = row.back().abs();
    }
    for (size_t j = 0; j < perms.size(); ++j) {
      if (preceq(I, perms[j])) continue;
      ++forbidden;
      worst = std::max(worst, (row[j].abs() / rowmax).to_double());
    }
  }
  std::ostringstream note;
  note << forbidden << " forbidden pairs out of " << perms.size() * perms.size();
  rep.claims.push_back(make_claim(
      "envelope/triangularity/n=" + std::to_string(p.n),
      "restriction entries vanish unless the row label is below the column label",
      worst, p.tol().to_double(), t0, note.str()));
  return rep;
}

Report verify_diagonal(const ParamSet& p) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "diagonal";
  SqThetaCtx sctx(p);
  ThetaCtx tctx(p);
  double worst_p = 0, worst_sign = 0;
  std::ostringstream consts;
  for (const Perm& I : all_perms(p.n)) {
    Scalar diag = restrict_weight(I, I, p, sctx);
    worst_p = std::max(worst_p, rel_diff(diag, p_factor(I, p, sctx)));
    Scalar c = diag / Theta_multiset(n_plus(I), tctx);
    int predicted = ((p.n * (p.n - 1) / 2) % 2 ? -1 : 1) * I.sign();
    worst_sign = std::max(worst_sign, (c - Scalar(predicted)).abs().to_double());
    consts << " " << I.str() << ": " << c.sci();
  }
  rep.claims.push_back(make_claim(
      "envelope/diagonal/n=" + std::to_string(p.n),
      "diagonal restrictions equal the closed theta product", worst_p, p.tol().to_double(), t0));
  // The alternative global sign (-1)^n that appears alongside the per-row
  // statement is inconsistent with it for n = 2, 3 mod 4; the per-row
  // constant is what is asserted here and the observed values are recorded.
  rep.claims.push_back(make_claim(
      "envelope/diagonal-sign/n=" + std::to_string(p.n),
      "the diagonal-to-normal-bundle constant is (-1)^{n(n-1)/2} times the permutation sign",
      worst_sign, p.tol().to_double(), t0, "observed constants:" + consts.str()));
  return rep;
}

Report verify_quasiperiodicity(const ParamSet& p, std::uint64_t tseed) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "quasiperiodicity";
  RatStream rs(tseed);
  for (const Perm& I : all_perms(p.n)) {
    WeightFnParams base = WeightFnParams::from_params(p);
    for (int k = 1; k <= p.n - 1; ++k)
      for (int a = 1; a <= k; ++a) base.t[k - 1][a - 1] = Sq(p.from_rat(rs.rat()));
    Scalar w0 = normalized_weight(I, base, p);

    auto check = [&](const char* var, const WeightFnParams& wp) {
      Scalar observed = normalized_weight(I, wp, p) / w0;
      Scalar predicted = companion_factor(I, base, wp, p);
      double resid = rel_diff(observed, predicted);
      rep.claims.push_back(make_claim(
          "envelope/quasiperiodicity/n=" + std::to_string(p.n) + "/I=" + I.str() + "/" + var,
          "a q-shift of one variable rescales the normalized weight function by "
          "the factor predicted by the companion theta product",
          resid, p.tol().to_double(), t0));
    };

    // One chern root shifted by q (the auxiliary variable moves by 1/q).
    WeightFnParams sx = base;
    sx.t[0][0] = Sq(sx.t[0][0].root / p.sqrt_q);
    check("chern-root", sx);

    // One equivariant parameter shifted by q.
    WeightFnParams su = base;
    su.t[p.n - 1][0] = Sq(su.t[p.n - 1][0].root / p.sqrt_q);
    check("equivariant", su);

    // One Kaehler parameter shifted by q (only the first twist moves).
    WeightFnParams sz = base;
    sz.mu[0] = Sq(sz.mu[0].root * p.sqrt_q);
    check("kahler", sz);

    // The coupling parameter shifted by q; the twists carry powers of it, so
    // holding the Kaehler parameters fixed moves the j-th twist by q^(n-j).
    WeightFnParams sh = base;
    sh.hbar = Sq(sh.hbar.root * p.sqrt_q);
    for (int j = 0; j < p.n - 1; ++j) sh.mu[j] = Sq(sh.mu[j].root * p.sqrt_q.pow(p.n - 1 - j));
    check("hbar", sh);
  }
  return rep;
}

Report verify_macdonald(const ParamSet& p) {
  Report rep;
  rep.suite = "macdonald";
  std::vector<Scalar> uinv;
  for (const Scalar& ui : p.u) uinv.push_back(ui.inv());
  for (int r = 1; r <= p.n; ++r) {
    double worst_z = 0, worst_u = 0;
    auto t0 = Clock::now();
    for (const Perm& I : all_perms(p.n)) {
      ShiftableFunction F = vertex_operand(I, p);
      TruncatedSeries lz = apply_D_zeta(F, r);
      TruncatedSeries rz = F.series.scaled(elementary_symmetric(uinv, r));
      worst_z = std::max(worst_z, series_residual(lz, rz));
      TruncatedSeries lu = apply_D_u(F, r);
      TruncatedSeries ru = scale_by_elementary_zeta_inv(F.series, p, r);
      worst_u = std::max(worst_u, series_residual(lu, ru));
    }
    rep.claims.push_back(make_claim(
        "macdonald/zeta-eigencheck/n=" + std::to_string(p.n) + "/r=" + std::to_string(r),
        "the Kaehler-side difference operator acts on the normalized vertex with the "
        "elementary symmetric eigenvalue in inverse equivariant parameters",
        worst_z, p.tol().to_double(), t0));
    rep.claims.push_back(make_claim(
        "macdonald/u-eigencheck/n=" + std::to_string(p.n) + "/r=" + std::to_string(r),
        "the equivariant-side difference operator acts on the normalized vertex with the "
        "elementary symmetric eigenvalue in inverse Kaehler parameters",
        worst_u, p.tol().to_double(), t0));
  }
  return rep;
}

Report verify_oracles(const ParamSet& p) {
  Report rep;
  rep.suite = "oracles";

  {
    auto t0 = Clock::now();
    long mismatches = 0, total = 0;
    for (int n = 2; n <= 4; ++n) {
      DegreeMatrix m = DegreeMatrix::zero(n);
      long cells = 0;
      for (const auto& row : m.d) cells += static_cast<long>(row.size());
      std::vector<int> flat(cells, 0);
      bool done = false;
      while (!done) {
        long idx = 0;
        for (auto& row : m.d)
          for (int& e : row) e = flat[idx++];
        ++total;
        if (admissible(m) != admissible_bruteforce(m)) ++mismatches;
        done = true;
        for (long i = 0; i < cells; ++i) {
          if (flat[i] < 3) {
            ++flat[i];
            std::fill(flat.begin(), flat.begin() + i, 0);
            done = false;
            break;
          }
        }
      }
    }
    rep.claims.push_back(make_claim(
        "oracles/admissibility",
        "matching-based cone membership agrees with brute-force injection search",
        static_cast<double>(mismatches), 0.0, t0,
        std::to_string(total) + " matrices with entries <= 3, n <= 4"));
  }

  if (p.n == 2) {
    auto t0 = Clock::now();
    double worst = 0;
    for (const Perm& I : all_perms(2)) {
      TruncatedSeries v = vertex_series(I, p);
      Scalar a = p.u[I[2] - 1] / p.u[I[1] - 1];
      for (int d = 0; d <= p.max_degree; ++d) {
        Scalar closed = pochhammer(p.hbar, p.q, d) / pochhammer(p.q, p.q, d) *
                        pochhammer(p.hbar * a, p.q, d) / pochhammer(p.q * a, p.q, d);
        worst = std::max(worst, rel_diff(v.coeff({d}), closed));
      }
    }
    rep.claims.push_back(make_claim(
        "oracles/vertex-closed-form/n=2",
        "the rank-one vertex coefficients collapse to a two-factor Pochhammer ratio", worst,
        p.tol().to_double(), t0));
  }

  {
    auto t0 = Clock::now();
    double worst = 0;
    for (const Perm& I : all_perms(p.n))
      worst = std::max(worst, polarization_identity_residual(I, p).to_double());
    rep.claims.push_back(make_claim(
        "oracles/polarization-identity/n=" + std::to_string(p.n),
        "the normal-bundle and polarization theta-phi products satisfy the exchange identity",
        worst, p.tol().to_double(), t0));
  }
  return rep;
}

}  // namespace fv
