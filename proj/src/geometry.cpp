#include "flagvert/geometry.hpp"

#include "flagvert/errors.hpp"

namespace fv {

// --- SqrtMonomial -----------------------------------------------------------

SqrtMonomial SqrtMonomial::u_ratio(int n, int k, int j) {
  SqrtMonomial m(n);
  m.eu[k - 1] += 2;
  m.eu[j - 1] -= 2;
  return m;
}

SqrtMonomial SqrtMonomial::u_var(int n, int i) {
  SqrtMonomial m(n);
  m.eu[i - 1] = 2;
  return m;
}

SqrtMonomial SqrtMonomial::zeta_var(int n, int i) {
  SqrtMonomial m(n);
  m.ez[i - 1] = 2;
  return m;
}

SqrtMonomial SqrtMonomial::q_pow(int n, long e) {
  SqrtMonomial m(n);
  m.eq = 2 * e;
  return m;
}

SqrtMonomial SqrtMonomial::hbar_pow(int n, long e) {
  SqrtMonomial m(n);
  m.eh = 2 * e;
  return m;
}

bool SqrtMonomial::is_one() const {
  if (eq || eh) return false;
  for (long e : eu)
    if (e) return false;
  for (long e : ez)
    if (e) return false;
  return true;
}

SqrtMonomial SqrtMonomial::operator*(const SqrtMonomial& o) const {
  SqrtMonomial m = *this;
  m.eq += o.eq;
  m.eh += o.eh;
  for (int i = 0; i < nvars(); ++i) {
    m.eu[i] += o.eu[i];
    m.ez[i] += o.ez[i];
  }
  return m;
}

SqrtMonomial SqrtMonomial::inv() const { return pow(-1); }

SqrtMonomial SqrtMonomial::operator/(const SqrtMonomial& o) const { return *this * o.inv(); }

SqrtMonomial SqrtMonomial::pow(long e) const {
  SqrtMonomial m = *this;
  m.eq *= e;
  m.eh *= e;
  for (auto& x : m.eu) x *= e;
  for (auto& x : m.ez) x *= e;
  return m;
}

SqrtMonomial SqrtMonomial::sqrt() const {
  SqrtMonomial m = *this;
  auto halve = [](long& x) {
    if (x % 2) throw Error("monomial has no exact square root");
    x /= 2;
  };
  halve(m.eq);
  halve(m.eh);
  for (auto& x : m.eu) halve(x);
  for (auto& x : m.ez) halve(x);
  return m;
}

SqrtMonomial SqrtMonomial::dualized() const {
  SqrtMonomial m = *this;
  m.eq = eq + eh;
  m.eh = -eh;
  return m;
}

SqrtMonomial SqrtMonomial::mirrored() const {
  SqrtMonomial m = dualized();
  std::swap(m.eu, m.ez);
  return m;
}

Scalar SqrtMonomial::value(const ParamSet& p) const {
  Scalar v = p.sqrt_q.pow(eq) * p.sqrt_hbar.pow(eh);
  for (int i = 0; i < nvars(); ++i) {
    if (eu[i]) v = v * p.sqrt_u[i].pow(eu[i]);
    if (ez[i]) v = v * p.sqrt_zeta[i].pow(ez[i]);
  }
  return v;
}

// --- WeightMultiset ---------------------------------------------------------

void WeightMultiset::add(const SqrtMonomial& m, long mult) {
  long& slot = w[m];
  slot += mult;
  if (slot == 0) w.erase(m);
}

WeightMultiset WeightMultiset::operator+(const WeightMultiset& o) const {
  WeightMultiset r = *this;
  for (const auto& [m, mult] : o.w) r.add(m, mult);
  return r;
}

WeightMultiset WeightMultiset::operator-(const WeightMultiset& o) const {
  WeightMultiset r = *this;
  for (const auto& [m, mult] : o.w) r.add(m, -mult);
  return r;
}

WeightMultiset WeightMultiset::negated() const {
  WeightMultiset r(n);
  for (const auto& [m, mult] : w) r.w[m] = -mult;
  return r;
}

WeightMultiset WeightMultiset::dualized() const {
  WeightMultiset r(n);
  for (const auto& [m, mult] : w) r.add(m.dualized(), mult);
  return r;
}

WeightMultiset WeightMultiset::mirrored() const {
  WeightMultiset r(n);
  for (const auto& [m, mult] : w) r.add(m.mirrored(), mult);
  return r;
}

long WeightMultiset::total_multiplicity() const {
  long t = 0;
  for (const auto& [m, mult] : w) t += mult;
  return t;
}

SqrtMonomial WeightMultiset::det() const {
  SqrtMonomial d(n);
  for (const auto& [m, mult] : w) d = d * m.pow(mult);
  return d;
}

SqrtMonomial WeightMultiset::sqrt_det() const { return det().sqrt(); }

// --- Fixed-point weight data ------------------------------------------------

WeightMultiset half_tangent(const Perm& I) {
  int n = I.n();
  WeightMultiset v(n);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) v.add(SqrtMonomial::u_ratio(n, I[k], I[j]));
  return v;
}

WeightMultiset full_tangent(const Perm& I) {
  int n = I.n();
  WeightMultiset v = half_tangent(I);
  SqrtMonomial hinv = SqrtMonomial::hbar_pow(n, -1);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) v.add(hinv * SqrtMonomial::u_ratio(n, I[j], I[k]));
  return v;
}

// For the chamber u -> (u^{-1},...,u^{-n}) the weight u_{I_k}/u_{I_j} is
// attracting iff its pairing I_j - I_k with the cocharacter is positive,
// i.e. I_k < I_j.
WeightMultiset n_plus(const Perm& I) {
  int n = I.n();
  WeightMultiset v(n);
  SqrtMonomial hinv = SqrtMonomial::hbar_pow(n, -1);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (I[k] < I[j]) v.add(SqrtMonomial::u_ratio(n, I[k], I[j]));
      if (I[j] < I[k]) v.add(hinv * SqrtMonomial::u_ratio(n, I[j], I[k]));
    }
  }
  return v;
}

WeightMultiset n_minus(const Perm& I) {
  int n = I.n();
  WeightMultiset v(n);
  SqrtMonomial hinv = SqrtMonomial::hbar_pow(n, -1);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (I[k] > I[j]) v.add(SqrtMonomial::u_ratio(n, I[k], I[j]));
      if (I[j] > I[k]) v.add(hinv * SqrtMonomial::u_ratio(n, I[j], I[k]));
    }
  }
  return v;
}

WeightMultiset index_bundle(const Perm& I, int chamber_sign) {
  int n = I.n();
  WeightMultiset v(n);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      bool attracting = I[k] < I[j];
      if (chamber_sign < 0) attracting = !attracting;
      if (attracting) v.add(SqrtMonomial::u_ratio(n, I[k], I[j]));
    }
  }
  return v;
}

SqrtMonomial line_restriction(int i, const Perm& I) {
  int n = I.n();
  SqrtMonomial m(n);
  for (int j = 1; j <= i; ++j) m.eu[I[j] - 1] += 2;
  return m;
}

}  // namespace fv
