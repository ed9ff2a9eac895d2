#pragma once

#include <map>
#include <vector>

#include "flagvert/geometry.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/qseries.hpp"

namespace fv {

/// A nonzero value carried together with its exact square root, so theta
/// evaluations never need numeric square roots.
struct Sq {
  Scalar root;  // square root of the value

  Sq() : root(1) {}
  explicit Sq(Scalar r) : root(std::move(r)) {}
  Scalar val() const { return root * root; }
  Sq operator*(const Sq& o) const { return Sq(root * o.root); }
  Sq operator/(const Sq& o) const { return Sq(root / o.root); }
  Sq inv() const { return Sq(root.inv()); }
};

/// Memoizing theta evaluator on Sq arguments (keyed by the root value).
class SqThetaCtx {
 public:
  explicit SqThetaCtx(const ParamSet& p) : p_(&p) {}
  const Scalar& theta(const Sq& x);
  const ParamSet& params() const { return *p_; }

 private:
  const ParamSet* p_;
  std::map<Scalar, Scalar> memo_;
};

/// Weight-function variables: Chern-root stand-ins t^{(k)} for k = 1..n
/// (level n fixed to w), the Kaehler-side mu with gauge mu_n = 1, and hbar.
/// Populated from a ParamSet via t -> 1/x, w_i -> 1/u_i,
/// mu_j/mu_{j+1} -> hbar z_j.
struct WeightFnParams {
  int n = 0;
  std::vector<std::vector<Sq>> t;  // t[k-1] has k entries; t[n-1] = w
  std::vector<Sq> mu;              // size n, mu[n-1] = 1
  Sq hbar;

  const std::vector<Sq>& w() const { return t[n - 1]; }

  /// w and mu from the parameter point; levels k < n left at w-prefixes
  /// (callers overwrite them).
  static WeightFnParams from_params(const ParamSet& p);
  /// Sets t^{(k)}_a = w_{i^{(k)}_a(J)} for k < n (fixed-point restriction).
  void set_fixed_point(const Perm& J);
};

/// The three-case factor of the weight function.
Scalar psi(const Perm& I, int k, int a, int c, const Sq& x, const WeightFnParams& wp,
           SqThetaCtx& ctx);

/// Unsymmetrized weight function U_I at the current t-assignment.
Scalar weight_U(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx);
/// E(t, hbar) = prod_k prod_{a,b} theta(hbar t_b / t_a).
Scalar weight_E(const WeightFnParams& wp, SqThetaCtx& ctx);
/// W_I = theta(1/hbar)^{n(n-1)/2} Sym U_I.
Scalar weight_W(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx);
/// Normalized weight function W_I / E.
Scalar weight_Wtilde(const Perm& I, const WeightFnParams& wp, SqThetaCtx& ctx);

/// W-tilde_I at the fixed-point substitution t = w_J.
Scalar restrict_weight(const Perm& I, const Perm& J, const ParamSet& p, SqThetaCtx& ctx);

/// Diagonal prediction P_I(w, hbar).
Scalar p_factor(const Perm& I, const ParamSet& p, SqThetaCtx& ctx);

/// e(x_I, z) = prod_i theta(L_i|_I) theta(z_i) / theta(L_i|_I z_i).
Scalar e_factor(const Perm& I, const ParamSet& p, ThetaCtx& ctx);

enum class StabNorm { Raw, Stab, S, Bold, Overline, A };

struct StabMatrix {
  StabNorm norm = StabNorm::Raw;
  std::vector<Perm> order;             // total_order(n)
  std::vector<std::vector<Scalar>> m;  // m[row I][col J]
};

/// Raw restriction matrix or its row-normalized stable envelope
/// (diagonal forced to Theta(N_I^+)); further normalizations per `norm`.
StabMatrix stab_matrix(const ParamSet& p, StabNorm norm);

}  // namespace fv
