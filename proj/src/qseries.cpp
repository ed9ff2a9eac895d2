#include "flagvert/qseries.hpp"

#include <algorithm>
#include <cmath>

#include "flagvert/errors.hpp"

namespace fv {

Scalar phi_trunc(const Scalar& x, const Scalar& q, int N) {
  Scalar acc(1);
  Scalar xq = x;
  for (int i = 0; i < N; ++i) {
    acc = acc * (Scalar(1) - xq);
    xq = xq * q;
  }
  return acc;
}

Scalar pochhammer(const Scalar& x, const Scalar& q, long d) {
  Scalar acc(1);
  if (d >= 0) {
    Scalar xq = x;
    for (long i = 0; i < d; ++i) {
      acc = acc * (Scalar(1) - xq);
      xq = xq * q;
    }
    return acc;
  }
  Scalar qinv = q.inv();
  Scalar xq = x * qinv;
  for (long i = 0; i < -d; ++i) {
    Scalar f = Scalar(1) - xq;
    if (f.is_zero()) throw PochhammerPole("pochhammer pole at index " + std::to_string(-i - 1));
    acc = acc / f;
    xq = xq * qinv;
  }
  return acc;
}

Scalar theta_sqrt(const Scalar& sx, const Scalar& q, int N) {
  if (sx.is_zero()) throw ZeroArgument("theta of zero argument");
  Scalar x = sx * sx;
  return (sx - sx.inv()) * phi_trunc(q * x, q, N) * phi_trunc(q / x, q, N);
}

int product_terms(const ParamSet& p) {
  if (p.backend == Backend::Exact) return p.theta_terms;
  double lq = -std::log10(std::abs(p.q.to_double()));
  int need = static_cast<int>(std::ceil((p.precision + 15) / std::max(lq, 0.5)));
  return std::max(p.theta_terms, need);
}

const Scalar& ThetaCtx::theta(const SqrtMonomial& m) {
  auto it = theta_memo_.find(m);
  if (it != theta_memo_.end()) return it->second;
  Scalar sx = m.sqrt().value(*p_);
  return theta_memo_.emplace(m, theta_sqrt(sx, p_->q, product_terms(*p_))).first->second;
}

const Scalar& ThetaCtx::phi(const SqrtMonomial& m) {
  auto it = phi_memo_.find(m);
  if (it != phi_memo_.end()) return it->second;
  return phi_memo_.emplace(m, phi_trunc(m.value(*p_), p_->q, product_terms(*p_))).first->second;
}

Scalar Theta_multiset(const WeightMultiset& v, ThetaCtx& ctx) {
  Scalar acc(1);
  for (const auto& [m, mult] : v.w) {
    if (mult == 0) continue;
    const Scalar& t = ctx.theta(m);
    if (mult < 0 && t.is_zero())
      throw DivisionByZeroTheta("theta vanishes on a negative-multiplicity weight");
    acc = acc * t.pow(mult);
  }
  return acc;
}

Scalar Phi_multiset(const WeightMultiset& v, ThetaCtx& ctx) {
  Scalar acc(1);
  for (const auto& [m, mult] : v.w) {
    if (mult == 0) continue;
    const Scalar& f = ctx.phi(m);
    if (mult < 0 && f.is_zero()) throw DivisionByZero("phi vanishes on a negative-multiplicity weight");
    acc = acc * f.pow(mult);
  }
  return acc;
}

Scalar phi_diff(const WeightMultiset& v, ThetaCtx& ctx) {
  int n = v.n;
  Scalar acc(1);
  SqrtMonomial qm = SqrtMonomial::q_pow(n, 1);
  SqrtMonomial hm = SqrtMonomial::hbar_pow(n, 1);
  for (const auto& [m, mult] : v.w) {
    if (mult == 0) continue;
    Scalar r = ctx.phi(qm * m) / ctx.phi(hm * m);
    acc = acc * r.pow(mult);
  }
  return acc;
}

}  // namespace fv
