#pragma once

#include <functional>

#include "flagvert/perm.hpp"
#include "flagvert/series.hpp"
#include "flagvert/vertex.hpp"

namespace fv {

/// An operand for the difference operators: a z-series tied to a parameter
/// point, a recipe to re-evaluate it at shifted parameters, and the analytic
/// responses of its scalar prefactor to single q-shifts.
struct ShiftableFunction {
  ParamSet base;
  TruncatedSeries series;
  /// Series part at arbitrary (shifted) parameters.
  std::function<TruncatedSeries(const ParamSet&)> reeval;
  /// Prefactor response to shifting zeta_i -> q zeta_i for every i with
  /// mask[i-1] = 1 (the z-monomial bookkeeping is handled by the operator).
  std::function<Scalar(const std::vector<int>& mask)> zeta_prefactor;
  /// Prefactor response to u_i -> q u_i on the mask. The zeta^{-1} factors
  /// in the response are z-Laurent monomials, so the response is a scalar
  /// together with a z-degree downshift: factor = scalar * z^{-zshift}.
  struct UResponse {
    Scalar scalar;
    std::vector<int> zshift;
  };
  std::function<UResponse(const ParamSet& shifted, const std::vector<int>& mask)> u_response;
};

/// The normalized vertex function at I (prefactor responses from its alpha
/// and Phi((q-hbar)T^{1/2}) parts).
ShiftableFunction vertex_operand(const Perm& I, const ParamSet& p);
/// The constant function 1 with trivial responses.
ShiftableFunction constant_operand(const ParamSet& p);
/// boldStab_{I,J} times the normalized vertex at J: vertex responses of J
/// combined with the scalar responses hbar^{1-n} (zeta) and (q/hbar)^{n-1}
/// (u) of the transition-matrix entry.
ShiftableFunction bold_term_operand(const Perm& I, const Perm& J, const ParamSet& p);

/// prod_{i in J, j notin J} (t x_i - x_j)/(x_i - x_j); mask is the indicator
/// of J. Throws CoincidentCoordinates on equal x-values across the split.
Scalar macdonald_coefficient(const std::vector<int>& mask, const std::vector<Scalar>& x,
                             const Scalar& t);

/// Difference operator in the zeta variables with t = hbar, acting on the
/// series by exact z-monomial bookkeeping; coefficients are expanded as
/// formal z-series. Returns the operator image relative to the unshifted
/// prefactor (compare against e_r(u^{-1}) * F.series).
TruncatedSeries apply_D_zeta(const ShiftableFunction& F, int r);

/// Difference operator in the u variables with t = q/hbar and prefactor
/// (q/hbar)^{r(n-1)}, acting by re-evaluation at shifted parameter points.
/// Compare against e_r(zeta^{-1}) * F.series.
TruncatedSeries apply_D_u(const ShiftableFunction& F, int r);

/// e_r(zeta^{-1}) * s with the zeta-inverses expanded as z-Laurent
/// monomials (zeta_i^{-1} = zeta_n^{-1} (q/hbar)^{n-i} z_i^{-1}...z_{n-1}^{-1});
/// the product shifts z-degrees, so only coefficients at degrees <= cap - r
/// (componentwise) are complete and returned.
TruncatedSeries scale_by_elementary_zeta_inv(const TruncatedSeries& s, const ParamSet& p, int r);

/// Elementary symmetric polynomial e_r(x).
Scalar elementary_symmetric(const std::vector<Scalar>& x, int r);
/// e_r via Vieta: coefficient extraction from prod (1 + s x_i).
Scalar elementary_symmetric_vieta(const std::vector<Scalar>& x, int r);

std::vector<std::vector<int>> subsets_of_size(int n, int r);

}  // namespace fv
