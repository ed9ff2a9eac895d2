#pragma once

#include <compare>
#include <map>
#include <vector>

#include "flagvert/params.hpp"

namespace fv {

/// A monomial character written multiplicatively in the square-root
/// generators: sqrt_q^eq * sqrt_hbar^eh * prod sqrt_u[i]^eu[i] * prod
/// sqrt_zeta[i]^ez[i]. Weights of K-theory classes have even exponents
/// here; their square roots are honest monomials with halved exponents.
struct SqrtMonomial {
  long eq = 0, eh = 0;
  std::vector<long> eu, ez;

  SqrtMonomial() = default;
  explicit SqrtMonomial(int n) : eu(n, 0), ez(n, 0) {}

  static SqrtMonomial one(int n) { return SqrtMonomial(n); }
  /// u_k / u_j in actual variables (1-based indices).
  static SqrtMonomial u_ratio(int n, int k, int j);
  static SqrtMonomial u_var(int n, int i);
  static SqrtMonomial zeta_var(int n, int i);
  static SqrtMonomial q_pow(int n, long e);
  static SqrtMonomial hbar_pow(int n, long e);

  int nvars() const { return static_cast<int>(eu.size()); }
  bool is_one() const;
  SqrtMonomial operator*(const SqrtMonomial& o) const;
  SqrtMonomial operator/(const SqrtMonomial& o) const;
  SqrtMonomial inv() const;
  SqrtMonomial pow(long e) const;
  /// Halves all exponents; requires all even.
  SqrtMonomial sqrt() const;
  /// Substitution hbar -> q/hbar (exponent-level 3d-mirror map on weights).
  SqrtMonomial dualized() const;
  /// Full mirror pullback on dual-chart weights: hbar -> q/hbar and the
  /// u/zeta exponent blocks exchanged.
  SqrtMonomial mirrored() const;

  Scalar value(const ParamSet& p) const;
  auto operator<=>(const SqrtMonomial&) const = default;
};

/// A formal integer combination of monomial characters; represents
/// K-theory classes such as T^{1/2}X, N_I^{+/-} at a fixed point.
struct WeightMultiset {
  int n = 0;
  std::map<SqrtMonomial, long> w;

  WeightMultiset() = default;
  explicit WeightMultiset(int n_) : n(n_) {}

  void add(const SqrtMonomial& m, long mult = 1);
  WeightMultiset operator+(const WeightMultiset& o) const;
  WeightMultiset operator-(const WeightMultiset& o) const;
  WeightMultiset negated() const;
  /// Applies hbar -> q/hbar to every weight.
  WeightMultiset dualized() const;
  /// Applies the mirror pullback (hbar -> q/hbar, u <-> zeta) to every weight.
  WeightMultiset mirrored() const;
  long total_multiplicity() const;

  /// Product of weights^multiplicity, as a monomial.
  SqrtMonomial det() const;
  /// Monomial square root of det(); exact because weights have even
  /// sqrt-generator exponents.
  SqrtMonomial sqrt_det() const;
};

}  // namespace fv
