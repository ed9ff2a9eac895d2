#include "flagvert/envelope.hpp"

#include <algorithm>
#include <numeric>

#include "flagvert/errors.hpp"
#include "flagvert/vertex.hpp"

namespace fv {

namespace {
Scalar alpha_eval(const Perm& I, const SqrtMonomial& t, ThetaCtx& ctx) {
  return alpha_atoms(I, t).eval(ctx);
}
}  // namespace

const Scalar& SqThetaCtx::theta(const Sq& x) {
  auto it = memo_.find(x.root);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(x.root, theta_sqrt(x.root, p_->q, product_terms(*p_))).first->second;
}

WeightFnParams WeightFnParams::from_params(const ParamSet& p) {
  WeightFnParams wp;
  wp.n = p.n;
  wp.hbar = Sq(p.sqrt_hbar);
  wp.t.resize(p.n);
  for (int k = 1; k <= p.n; ++k) {
    wp.t[k - 1].resize(k);
    for (int a = 1; a <= k; ++a) wp.t[k - 1][a - 1] = Sq(p.sqrt_u[a - 1].inv());
  }
  // mu_j / mu_{j+1} = hbar z_j = q zeta_j / zeta_{j+1}; gauge mu_n = 1.
  wp.mu.assign(p.n, Sq(Scalar(1)));
  for (int j = p.n - 1; j >= 1; --j) {
    Sq ratio(p.sqrt_q * p.sqrt_zeta[j - 1] / p.sqrt_zeta[j]);
    wp.mu[j - 1] = wp.mu[j] * ratio;
  }
  return wp;
}

void WeightFnParams::set_fixed_point(const Perm& J) {
  const std::vector<Sq> wv = t[n - 1];
  for (int k = 1; k < n; ++k) {
    for (int a = 1; a <= k; ++a) t[k - 1][a - 1] = wv[J.ordered_index(k, a) - 1];
  }
}

Scalar psi(const Perm& I, int k, int a, int c, const Sq& x, const WeightFnParams& wp,
           SqThetaCtx& ctx) {
  int ia = I.ordered_index(k, a);
  int ic = I.ordered_index(k + 1, c);
  if (ic < ia) return ctx.theta(x);
  if (ic > ia) return ctx.theta(x / wp.hbar);
  int delta = I[k + 1] < ia ? 1 : 0;
  int j = I.j_index(k, a);
  Sq m = wp.mu[j - 1] / wp.mu[k];  // mu_j / mu_{k+1}
  if (delta) m = m / wp.hbar;
  const Scalar& den = ctx.theta(m);
  if (den.is_zero()) throw DivisionByZeroTheta("psi: theta of mu-ratio vanishes");
  return ctx.theta(x * m) / den;
}

Scalar weight_U(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx) {
  int n = wp.n;
  Scalar acc(1);
  for (int k = 1; k <= n - 1; ++k) {
    const auto& tk = wp.t[k - 1];
    const auto& tk1 = wp.t[k];
    for (int a = 1; a <= k; ++a) {
      for (int c = 1; c <= k + 1; ++c) acc *= psi(I, k, a, c, tk1[c - 1] / tk[a - 1], wp, ctx);
      for (int b = a + 1; b <= k; ++b) {
        Sq r = tk[b - 1] / tk[a - 1];
        const Scalar& den = ctx.theta(r);
        if (den.is_zero()) throw SymmetrizationPole("coincident t-values within a level");
        acc *= ctx.theta(wp.hbar * r) / den;
      }
    }
  }
  return acc;
}

Scalar weight_E(const WeightFnParams& wp, SqThetaCtx& ctx) {
  Scalar acc(1);
  for (int k = 1; k <= wp.n - 1; ++k) {
    const auto& tk = wp.t[k - 1];
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= k; ++b) acc *= ctx.theta(wp.hbar * tk[b - 1] / tk[a - 1]);
  }
  return acc;
}

namespace {

// Sum of U_I over independent permutations of each t-level 1..n-1.
Scalar sym_U(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx) {
  WeightFnParams cur = wp;
  int n = wp.n;
  std::vector<std::vector<int>> idx(n - 1);
  for (int k = 1; k <= n - 1; ++k) {
    idx[k - 1].resize(k);
    std::iota(idx[k - 1].begin(), idx[k - 1].end(), 0);
  }
  Scalar total(0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      total += weight_U(I, cur, ctx);
      return;
    }
    std::sort(idx[k - 1].begin(), idx[k - 1].end());
    do {
      for (int a = 0; a < k; ++a) cur.t[k - 1][a] = wp.t[k - 1][idx[k - 1][a]];
      self(self, k + 1);
    } while (std::next_permutation(idx[k - 1].begin(), idx[k - 1].end()));
  };
  rec(rec, 1);
  return total;
}

}  // namespace

Scalar weight_W(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx) {
  int n = wp.n;
  Sq hinv = wp.hbar.inv();
  return ctx.theta(hinv).pow(n * (n - 1) / 2) * sym_U(I, wp, ctx);
}

Scalar weight_Wtilde(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx) {
  return weight_W(I, wp, ctx) / weight_E(wp, ctx);
}

Scalar restrict_weight(const Perm& I, const Perm& J, const ParamSet& p, SqThetaCtx& ctx) {
  WeightFnParams wp = WeightFnParams::from_params(p);
  wp.set_fixed_point(J);
  return weight_Wtilde(I, wp, ctx);
}

Scalar p_factor(const Perm& I, const ParamSet& p, SqThetaCtx& ctx) {
  int n = p.n;
  Scalar acc(1);
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      Sq r(p.sqrt_u[I[l] - 1] / p.sqrt_u[I[k] - 1]);  // w_{I_k}/w_{I_l}
      if (I[l] < I[k]) acc *= ctx.theta(r);
      if (I[k] < I[l]) acc *= ctx.theta(Sq(p.sqrt_hbar) * r);
    }
  }
  return acc;
}

Scalar e_factor(const Perm& I, const ParamSet& p, ThetaCtx& ctx) {
  int n = p.n;
  Scalar acc(1);
  SqrtMonomial qh = SqrtMonomial::q_pow(n, 1) / SqrtMonomial::hbar_pow(n, 1);
  for (int i = 1; i <= n - 1; ++i) {
    SqrtMonomial li = line_restriction(i, I);
    SqrtMonomial zi =
        qh * SqrtMonomial::zeta_var(n, i) / SqrtMonomial::zeta_var(n, i + 1);
    const Scalar& den = ctx.theta(li * zi);
    if (den.is_zero()) throw DivisionByZeroTheta("e-factor: theta(L_i z_i) vanishes");
    acc *= ctx.theta(li) * ctx.theta(zi) / den;
  }
  return acc;
}

StabMatrix stab_matrix(const ParamSet& p, StabNorm norm) {
  int n = p.n;
  StabMatrix out;
  out.norm = norm;
  out.order = total_order(n);
  size_t m = out.order.size();
  out.m.assign(m, std::vector<Scalar>(m, Scalar(0)));

  SqThetaCtx sctx(p);
  ThetaCtx mctx(p);
  std::vector<Scalar> raw_diag(m), row_scale(m, Scalar(1));
  for (size_t i = 0; i < m; ++i) {
    raw_diag[i] = restrict_weight(out.order[i], out.order[i], p, sctx);
    if (norm != StabNorm::Raw) {
      if (raw_diag[i].abs() <= p.tol()) throw ZeroDiagonal("restriction diagonal below tolerance");
      row_scale[i] = Theta_multiset(n_plus(out.order[i]), mctx) / raw_diag[i];
    }
  }
  for (size_t i = 0; i < m; ++i) {
    const Perm& I = out.order[i];
    for (size_t j = 0; j < m; ++j) {
      const Perm& J = out.order[j];
      if (norm != StabNorm::Raw && !preceq(I, J)) continue;  // exact support vanishing
      out.m[i][j] = restrict_weight(I, J, p, sctx) * row_scale[i];
    }
  }
  if (norm == StabNorm::Raw || norm == StabNorm::Stab) return out;

  // Per-row and per-column correction factors for the other normalizations.
  for (size_t i = 0; i < m; ++i) {
    const Perm& I = out.order[i];
    Perm Id = I.inv();
    for (size_t j = 0; j < m; ++j) {
      const Perm& J = out.order[j];
      Scalar& v = out.m[i][j];
      switch (norm) {
        case StabNorm::S:
          v = e_factor(I, p, mctx).inv() * Theta_multiset(n_plus(I), mctx).inv() * v *
              e_factor(J, p, mctx);
          break;
        case StabNorm::Overline: {
          WeightMultiset diff = half_tangent(I) + n_plus(J) - half_tangent(J) - n_plus(I);
          v = diff.sqrt_det().value(p) * v;
          break;
        }
        case StabNorm::Bold: {
          WeightMultiset diff = half_tangent(I) + n_plus(Id).mirrored() -
                                half_tangent(Id).mirrored() - n_plus(I);
          Scalar pre = diff.sqrt_det().value(p);
          Scalar adual = dual_alpha_atoms(Id).eval(mctx);
          Scalar aj = alpha_eval(J, SqrtMonomial::hbar_pow(n, 1), mctx);
          Scalar th_ndual = Theta_multiset(n_plus(Id).mirrored(), mctx);
          Scalar th_tdual = Theta_multiset(half_tangent(Id).mirrored(), mctx);
          Scalar th_tj = Theta_multiset(half_tangent(J), mctx);
          v = pre * adual / aj * v / th_ndual * th_tdual / th_tj;
          break;
        }
        case StabNorm::A: {
          WeightMultiset diff = half_tangent(I) - n_plus(I);
          Scalar pre = diff.sqrt_det().value(p);
          Scalar adual = dual_alpha_atoms(Id).eval(mctx);
          Scalar aj = alpha_eval(J, SqrtMonomial::hbar_pow(n, 1), mctx);
          Scalar th_tj = Theta_multiset(half_tangent(J), mctx);
          v = pre * adual * v / aj / th_tj;
          break;
        }
        default:
          break;
      }
    }
  }
  return out;
}

}  // namespace fv
