#pragma once

#include <map>
#include <string>

#include "flagvert/monomial.hpp"
#include "flagvert/params.hpp"

namespace fv {

/// Truncated infinite product: prod_{i=0}^{N-1} (1 - x q^i).
Scalar phi_trunc(const Scalar& x, const Scalar& q, int N);

/// q-Pochhammer (x)_d = phi(x)/phi(x q^d) as its finite closed form, exact
/// for either sign of d. Throws PochhammerPole if a denominator factor of
/// the negative-index form vanishes.
Scalar pochhammer(const Scalar& x, const Scalar& q, long d);

/// Odd Jacobi theta, truncated: (sx - 1/sx) phi(q sx^2) phi(q / sx^2).
/// `sx` is the square root of the intended argument.
Scalar theta_sqrt(const Scalar& sx, const Scalar& q, int N);

/// Number of product factors to evaluate. The nominal N fixes the q-order
/// of series comparisons; float backends extend the product until its
/// truncation error falls below the working precision, so that N never
/// limits the accuracy of a plain numeric evaluation.
int product_terms(const ParamSet& p);

/// Memoizing evaluator for theta at SqrtMonomial arguments against a fixed
/// ParamSet. Not thread-safe; use one per worker.
class ThetaCtx {
 public:
  explicit ThetaCtx(const ParamSet& p) : p_(&p) {}

  /// theta(value of m), cached by exponent vector.
  const Scalar& theta(const SqrtMonomial& m);
  /// phi_trunc(value of m), cached.
  const Scalar& phi(const SqrtMonomial& m);
  const ParamSet& params() const { return *p_; }

 private:
  const ParamSet* p_;
  std::map<SqrtMonomial, Scalar> theta_memo_, phi_memo_;
};

/// Theta(V) = prod theta(w)^{mult(w)}; negative multiplicities divide.
Scalar Theta_multiset(const WeightMultiset& v, ThetaCtx& ctx);
/// Phi(V) = prod phi(w)^{mult(w)}.
Scalar Phi_multiset(const WeightMultiset& v, ThetaCtx& ctx);
/// Phi((q - hbar) V) = prod_w phi(q w)/phi(hbar w).
Scalar phi_diff(const WeightMultiset& v, ThetaCtx& ctx);

}  // namespace fv
