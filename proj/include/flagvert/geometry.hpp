#pragma once

#include "flagvert/monomial.hpp"
#include "flagvert/perm.hpp"

namespace fv {

/// Polarization at the fixed point I: {u_{I_k}/u_{I_j} : j < k}.
WeightMultiset half_tangent(const Perm& I);
/// T_I X = half_tangent + hbar^{-1} * dual(half_tangent).
WeightMultiset full_tangent(const Perm& I);

/// Attracting / repelling parts of the tangent space for the fixed chamber
/// u -> (u^{-1}, ..., u^{-n}); n_plus + n_minus = full_tangent.
WeightMultiset n_plus(const Perm& I);
WeightMultiset n_minus(const Perm& I);

/// Attracting sub-multiset of the polarization for the signed chamber,
/// chamber_sign = +1 for the fixed chamber, -1 for its opposite.
WeightMultiset index_bundle(const Perm& I, int chamber_sign);

/// Tautological line bundle restriction L_i|_I = u_{I_1} ... u_{I_i}.
SqrtMonomial line_restriction(int i, const Perm& I);

}  // namespace fv
