#pragma once

#include "flagvert/degrees.hpp"
#include "flagvert/geometry.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/qseries.hpp"
#include "flagvert/series.hpp"

namespace fv {

/// Coefficient of z^d in the vertex series at fixed point I: the triple
/// product of Pochhammer ratios with exponents d_{i,j}-d_{i+1,k},
/// d_{i,j}-d_{i,k} and d_{n-1,j}.
Scalar vertex_coefficient(const Perm& I, const DegreeMatrix& d, const ParamSet& p);

/// Vertex series grouped by z-degree vector (deg_i = row sums), summed over
/// the admissible cone up to the per-variable cap p.max_degree.
TruncatedSeries vertex_series(const Perm& I, const ParamSet& p);

/// Scalar prefactor kept as lists of theta/phi atoms at monomial arguments,
/// so q-shifted parameter sets re-evaluate the same atoms.
struct PrefactorAtoms {
  WeightMultiset theta;  // exponents of theta factors
  WeightMultiset phi;    // exponents of phi factors
  Scalar eval(ThetaCtx& ctx) const;
  PrefactorAtoms operator*(const PrefactorAtoms& o) const;
};

/// alpha_I with deformation monomial t: product over i of
/// theta(zeta_i t^{i-n}) theta(u_{I_i} (q/t)^{n-i}) / theta(zeta_i / u_{I_i}).
PrefactorAtoms alpha_atoms(const Perm& I, const SqrtMonomial& t);

/// Mirror pullback of the dual-chart alpha at the dual label Idual: every
/// atom of alpha_{Idual}(hbar) with u <-> zeta exchanged and hbar -> q/hbar.
PrefactorAtoms dual_alpha_atoms(const Perm& Idual);

/// Atoms of Phi((q - hbar) V): phi(q w)/phi(hbar w) per weight.
PrefactorAtoms phi_diff_atoms(const WeightMultiset& v);

/// Normalized vertex: prefactor alpha_I(hbar) * Phi((q-hbar) T^{1/2}_I X)
/// kept apart from the series.
struct NormalizedVertex {
  PrefactorAtoms prefactor;
  TruncatedSeries series;
};
NormalizedVertex normalized_vertex(const Perm& I, const ParamSet& p);

/// Closed form of the chamber limit of the vertex series: product over
/// j < k of phi(q (hbar/q)^{k-j+delta} Z)/phi((hbar/q)^{k-j-1+delta} Z),
/// Z = z_j...z_{k-1}, delta = [I_j < I_k], expanded as a z-series.
TruncatedSeries vertex_limit(const Perm& I, const ParamSet& p);

}  // namespace fv
