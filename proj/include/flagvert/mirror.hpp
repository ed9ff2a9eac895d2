#pragma once

#include <gmpxx.h>

#include "flagvert/params.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/qseries.hpp"
#include "flagvert/report.hpp"
#include "flagvert/series.hpp"

namespace fv {

/// Dual parameter chart: the same numeric torus point with hbar read as
/// q/hbar (zeta, u, q unchanged). Kaehler and equivariant coordinates swap
/// roles across the chart: z_i = hbar' a'_i and a_i = (hbar'/q) z'_i.
/// Re-checks genericity; throws NonGenericParameters.
ParamSet kappa(const ParamSet& p);

/// Fixed-point pairing I <-> I^{-1} under the duality.
Perm dual_fixed_point(const Perm& I);

/// The cocharacter/stability exchange is a geometric statement with no
/// numeric content here; this stub marks it as deliberately unimplemented.
const char* kappa_cocharacter_exchange_stub();

/// Phi((q - hb) N_I^+) expanded as a power series in the a-variables
/// (a_i ~ z-slot i), exact up to the per-variable cap.
TruncatedSeries attracting_phi_series(const Perm& I, const ParamSet& p, const Scalar& hb);

/// alpha_I of the dual chart pulled back to p: every weight dualized, so the
/// deformation parameter becomes q/hbar.
Scalar dual_alpha_value(const Perm& I, const ParamSet& p, ThetaCtx& ctx);

/// |LHS/RHS - 1| for the polarization identity
/// Theta(N_I^+) Phi((q-hbar) T^{1/2}_I) / Theta(T^{1/2}_I)
///   = sqrt(det N_I^+ / det T^{1/2}_I) Phi((q-hbar) N_I^+).
Scalar polarization_identity_residual(const Perm& I, const ParamSet& p);

/// Chamber cocharacter step: every a_i scales by w = q^lambda. Powers of q
/// keep the scaling exact on the generators and make the q-periodic factors
/// in the envelope entries exactly periodic along the sequence.
ParamSet scaled_along_chamber(const ParamSet& p, int lambda);

/// Every z_i scales by q^m (exact on the zeta generators). The limit
/// statements' decay factors carry positive powers of z_i/q, so they are
/// measurable at rate >= 1 only for |z_i| < |q|.
ParamSet scaled_kahler(const ParamSet& p, int m);

enum class TheoremForm { Overline, Bold };

/// Checks that the row-I transition identity between the two vertex-function
/// families holds numerically: the dual-side normalized vertex equals the
/// stable-envelope-weighted sum of the original ones. Throws TailTooLarge
/// when series tails at the current cap exceed the reachable accuracy.
Report verify_main_theorem(const Perm& I, const ParamSet& p, TheoremForm form);

/// Builds M = P^{-1} dual(boldStab) P boldStab with P the fixed-point
/// pairing matrix and checks M = Id.
Report verify_stab_inverse(const ParamSet& p);

/// Chamber-limit checks at fixed point I: the closed-form limit series
/// matches the dual attracting Phi-factor coefficient-wise, the diagonal
/// term converges to it along u -> sigma(w) u, and the off-diagonal terms
/// decay with slope >= 1 decade per decade of w.
Report verify_limits(const Perm& I, const ParamSet& p);

}  // namespace fv
