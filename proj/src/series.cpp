#include "flagvert/series.hpp"

#include <algorithm>

#include "flagvert/errors.hpp"

namespace fv {

TruncatedSeries TruncatedSeries::one(int nvars, int cap) {
  TruncatedSeries s(nvars, cap);
  s.c.emplace(std::vector<int>(nvars, 0), Scalar(1));
  return s;
}

bool TruncatedSeries::in_range(const std::vector<int>& deg) const {
  for (int d : deg)
    if (d < 0 || d > cap) return false;
  return true;
}

Scalar TruncatedSeries::coeff(const std::vector<int>& deg) const {
  auto it = c.find(deg);
  return it == c.end() ? Scalar(0) : it->second;
}

void TruncatedSeries::set(const std::vector<int>& deg, Scalar v) { c[deg] = std::move(v); }

void TruncatedSeries::add(const std::vector<int>& deg, const Scalar& v) {
  auto [it, fresh] = c.emplace(deg, v);
  if (!fresh) it->second += v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r = *this;
  for (const auto& [d, v] : o.c) r.add(d, v);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r = *this;
  for (const auto& [d, v] : o.c) r.add(d, -v);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(nvars, cap);
  std::vector<int> d(nvars);
  for (const auto& [da, va] : c) {
    for (const auto& [db, vb] : o.c) {
      bool ok = true;
      for (int i = 0; i < nvars; ++i) {
        d[i] = da[i] + db[i];
        if (d[i] > cap) {
          ok = false;
          break;
        }
      }
      if (ok) r.add(d, va * vb);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& s) const {
  TruncatedSeries r = *this;
  for (auto& [d, v] : r.c) v *= s;
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  std::vector<int> zero(nvars, 0);
  Scalar c0 = coeff(zero);
  if (c0.is_zero()) throw DivisionByZero("series reciprocal: zero constant term");
  Scalar c0inv = c0.inv();
  // Newton-free direct recursion on total degree: b_d = -1/c0 * sum_{0<e<=d}
  // a_e b_{d-e}.
  TruncatedSeries b(nvars, cap);
  b.set(zero, c0inv);
  // Order target degrees by total degree so dependencies are ready.
  std::vector<std::vector<int>> degs;
  std::vector<int> cur(nvars, 0);
  while (true) {
    degs.push_back(cur);
    int i = 0;
    while (i < nvars && ++cur[i] > cap) cur[i++] = 0;
    if (i == nvars) break;
  }
  std::stable_sort(degs.begin(), degs.end(), [](const auto& x, const auto& y) {
    int tx = 0, ty = 0;
    for (int v : x) tx += v;
    for (int v : y) ty += v;
    return tx < ty;
  });
  for (const auto& d : degs) {
    if (d == zero) continue;
    Scalar acc(0);
    // sum over nonzero e <= d of a_e * b_{d-e}
    std::vector<int> e(nvars, 0), rem(nvars);
    while (true) {
      bool nonzero = false;
      for (int i = 0; i < nvars; ++i) {
        rem[i] = d[i] - e[i];
        if (e[i]) nonzero = true;
      }
      if (nonzero) {
        auto it = c.find(e);
        if (it != c.end()) {
          auto jt = b.c.find(rem);
          if (jt != b.c.end()) acc += it->second * jt->second;
        }
      }
      int i = 0;
      while (i < nvars && ++e[i] > d[i]) e[i++] = 0;
      if (i == nvars) break;
    }
    if (!acc.is_zero()) b.set(d, -(c0inv * acc));
  }
  return b;
}

Scalar TruncatedSeries::eval(const std::vector<Scalar>& z) const {
  Scalar acc(0);
  for (const auto& [d, v] : c) {
    Scalar term = v;
    for (int i = 0; i < nvars; ++i) {
      if (d[i]) term *= z[i].pow(d[i]);
    }
    acc += term;
  }
  return acc;
}

Scalar TruncatedSeries::max_top_coeff_abs() const {
  Scalar best(0);
  for (const auto& [d, v] : c) {
    int t = 0, mx = 0;
    for (int x : d) {
      t += x;
      mx = std::max(mx, x);
    }
    if (mx == cap) {
      Scalar a = v.abs();
      if (a > best) best = a;
    }
    (void)t;
  }
  return best;
}

TruncatedSeries phi_series(const Scalar& t, const std::vector<int>& step, const Scalar& q,
                           int nvars, int cap, bool reciprocal) {
  TruncatedSeries s(nvars, cap);
  // Number of step-multiples that stay within the cap.
  int kmax = cap;
  for (int i = 0; i < nvars; ++i) {
    if (step[i] > 0) kmax = std::min(kmax, cap / step[i]);
  }
  Scalar qq_poch(1);  // (q;q)_k
  Scalar tk(1);       // t^k
  Scalar qtri(1);     // q^{k(k-1)/2}
  std::vector<int> d(nvars, 0);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      qq_poch *= Scalar(1) - q.pow(k);
      tk *= t;
      if (k > 1) qtri *= q.pow(k - 1);
      for (int i = 0; i < nvars; ++i) d[i] += step[i];
    }
    Scalar coeff = reciprocal ? tk / qq_poch
                              : (k % 2 ? -(qtri * tk / qq_poch) : qtri * tk / qq_poch);
    s.add(d, coeff);
  }
  return s;
}

}  // namespace fv
