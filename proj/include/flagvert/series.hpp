#pragma once

#include <map>
#include <vector>

#include "flagvert/scalar.hpp"

namespace fv {

/// Power series in z_1..z_{n-1} truncated to per-variable degree <= cap.
/// Degrees are vectors of length n-1.
struct TruncatedSeries {
  int nvars = 0;
  int cap = 0;
  std::map<std::vector<int>, Scalar> c;

  TruncatedSeries() = default;
  TruncatedSeries(int nvars_, int cap_) : nvars(nvars_), cap(cap_) {}
  static TruncatedSeries one(int nvars, int cap);

  bool in_range(const std::vector<int>& deg) const;
  Scalar coeff(const std::vector<int>& deg) const;  // 0 when absent
  void set(const std::vector<int>& deg, Scalar v);
  void add(const std::vector<int>& deg, const Scalar& v);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Scalar& s) const;
  /// 1/this; requires nonzero constant term.
  TruncatedSeries reciprocal() const;

  /// Numeric sum of coeff * prod z_i^{deg_i} at the given point.
  Scalar eval(const std::vector<Scalar>& z) const;
  /// Largest |coefficient| among monomials of total degree == cap (tail
  /// estimate input); zero Scalar if none.
  Scalar max_top_coeff_abs() const;
};

/// Truncated expansion of phi(t Z) = sum_k (-1)^k q^{k(k-1)/2} t^k Z^k /
/// (q;q)_k where Z is the monomial z_j...z_{k-1} (degree vector `step`),
/// and of its reciprocal via 1/phi(t Z) = sum_k t^k Z^k / (q;q)_k.
TruncatedSeries phi_series(const Scalar& t, const std::vector<int>& step, const Scalar& q,
                           int nvars, int cap, bool reciprocal);

}  // namespace fv
