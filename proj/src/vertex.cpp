#include "flagvert/vertex.hpp"

namespace fv {

Scalar vertex_coefficient(const Perm& I, const DegreeMatrix& dm, const ParamSet& p) {
  int n = p.n;
  const auto& d = dm.d;  // d[i-1][j-1]
  Scalar acc(1);
  // Pairs of consecutive rows.
  for (int i = 1; i <= n - 2; ++i) {
    for (int j = 1; j <= i; ++j) {
      for (int k = 1; k <= i + 1; ++k) {
        long e = d[i - 1][j - 1] - d[i][k - 1];
        if (e == 0) continue;
        Scalar r = p.u[I[k] - 1] / p.u[I[j] - 1];
        acc *= pochhammer(p.hbar * r, p.q, e) / pochhammer(p.q * r, p.q, e);
      }
    }
  }
  // Within-row pairs, with the ratio inverted.
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i; ++j) {
      for (int k = 1; k <= i; ++k) {
        long e = d[i - 1][j - 1] - d[i - 1][k - 1];
        if (e == 0) continue;
        Scalar r = p.u[I[k] - 1] / p.u[I[j] - 1];
        acc *= pochhammer(p.q * r, p.q, e) / pochhammer(p.hbar * r, p.q, e);
      }
    }
  }
  // Last row against all framing parameters.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      long e = d[n - 2][j - 1];
      if (e == 0) continue;
      Scalar r = p.u[i - 1] / p.u[I[j] - 1];
      acc *= pochhammer(p.hbar * r, p.q, e) / pochhammer(p.q * r, p.q, e);
    }
  }
  return acc;
}

TruncatedSeries vertex_series(const Perm& I, const ParamSet& p) {
  int n = p.n;
  TruncatedSeries s(n - 1, p.max_degree);
  for (const auto& dm : enumerate_degrees(n, p.max_degree)) {
    std::vector<int> deg(n - 1);
    for (int i = 1; i <= n - 1; ++i) deg[i - 1] = dm.row_sum(i);
    s.add(deg, vertex_coefficient(I, dm, p));
  }
  return s;
}

Scalar PrefactorAtoms::eval(ThetaCtx& ctx) const {
  return Theta_multiset(theta, ctx) * Phi_multiset(phi, ctx);
}

PrefactorAtoms PrefactorAtoms::operator*(const PrefactorAtoms& o) const {
  return {theta + o.theta, phi + o.phi};
}

PrefactorAtoms alpha_atoms(const Perm& I, const SqrtMonomial& t) {
  int n = I.n();
  PrefactorAtoms a;
  a.theta = WeightMultiset(n);
  a.phi = WeightMultiset(n);
  SqrtMonomial qt = SqrtMonomial::q_pow(n, 1) / t;  // q/t
  for (int i = 1; i <= n; ++i) {
    SqrtMonomial zi = SqrtMonomial::zeta_var(n, i);
    SqrtMonomial ui = SqrtMonomial::u_var(n, I[i]);
    a.theta.add(zi * t.pow(i - n));
    a.theta.add(ui * qt.pow(n - i));
    a.theta.add(zi / ui, -1);
  }
  return a;
}

PrefactorAtoms dual_alpha_atoms(const Perm& Idual) {
  PrefactorAtoms a = alpha_atoms(Idual, SqrtMonomial::hbar_pow(Idual.n(), 1));
  a.theta = a.theta.mirrored();
  a.phi = a.phi.mirrored();
  return a;
}

PrefactorAtoms phi_diff_atoms(const WeightMultiset& v) {
  int n = v.n;
  PrefactorAtoms a;
  a.theta = WeightMultiset(n);
  a.phi = WeightMultiset(n);
  SqrtMonomial qm = SqrtMonomial::q_pow(n, 1);
  SqrtMonomial hm = SqrtMonomial::hbar_pow(n, 1);
  for (const auto& [m, mult] : v.w) {
    a.phi.add(qm * m, mult);
    a.phi.add(hm * m, -mult);
  }
  return a;
}

NormalizedVertex normalized_vertex(const Perm& I, const ParamSet& p) {
  NormalizedVertex nv;
  nv.prefactor = alpha_atoms(I, SqrtMonomial::hbar_pow(p.n, 1)) * phi_diff_atoms(half_tangent(I));
  nv.series = vertex_series(I, p);
  return nv;
}

TruncatedSeries vertex_limit(const Perm& I, const ParamSet& p) {
  int n = p.n;
  int cap = p.max_degree;
  TruncatedSeries s = TruncatedSeries::one(n - 1, cap);
  Scalar hq = p.hbar / p.q;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      int delta = I[j] < I[k] ? 1 : 0;
      std::vector<int> step(n - 1, 0);
      for (int m = j; m <= k - 1; ++m) step[m - 1] = 1;
      s = s * phi_series(p.q * hq.pow(k - j + delta), step, p.q, n - 1, cap, false);
      s = s * phi_series(hq.pow(k - j - 1 + delta), step, p.q, n - 1, cap, true);
    }
  }
  return s;
}

}  // namespace fv
