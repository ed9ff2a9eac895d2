#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagvert/scalar.hpp"

namespace fv {

/// Numeric specialization of (n, q, hbar, u_i, zeta_i), entered through
/// explicit square-root generators so that every half-integer power in the
/// formulas is an exact monomial in the generators. Immutable after
/// construction.
struct ParamSet {
  int n = 2;
  Backend backend = Backend::Exact;
  int precision = 120;   // decimal digits, float backend only
  int theta_terms = 40;  // N: factors kept in each truncated infinite product
  int max_degree = 6;    // D: per-variable series degree bound

  // Square-root generators, always kept as exact rationals.
  mpq_class g_q, g_hbar;
  std::vector<mpq_class> g_u, g_zeta;  // size n

  // Backend representations of the generators and derived quantities.
  Scalar sqrt_q, sqrt_hbar;
  std::vector<Scalar> sqrt_u, sqrt_zeta;  // size n
  Scalar q, hbar;
  std::vector<Scalar> u, zeta;  // size n
  std::vector<Scalar> a, z;     // size n-1; a_i = u_i/u_{i+1}, z_i = (q/hbar) zeta_i/zeta_{i+1}

  Scalar from_rat(const mpq_class& r) const;
  /// Default relative tolerance 100 |q|^(N-1) for truncation-limited checks.
  Scalar tol() const;

  /// Copy with u_i multiplied by q (exact on the generators). 1-based i.
  ParamSet shifted_u(int i) const;
  /// Copy with zeta_i multiplied by q. 1-based i.
  ParamSet shifted_zeta(int i) const;
  ParamSet with_backend(Backend b, int precision_digits) const;
  ParamSet with_theta_terms(int N) const;
  ParamSet with_max_degree(int D) const;
  /// Copy with raw generator edits re-derived (genericity not re-checked).
  static ParamSet rederive(ParamSet p);

  std::string to_toml() const;
  static ParamSet from_toml(const std::string& text);
};

/// Constructs and validates a ParamSet. Throws DegenerateModulus if
/// |q| >= 1 and NonGenericParameters if some monomial in the generators
/// with exponents bounded by 2D+2n collapses to 1.
ParamSet build_params(int n, const mpq_class& sqrt_q, const mpq_class& sqrt_hbar,
                      const std::vector<mpq_class>& sqrt_u, const std::vector<mpq_class>& sqrt_zeta,
                      int theta_terms, int max_degree, Backend backend = Backend::Exact,
                      int precision = 120);

/// As build_params but without the genericity check (deliberately degenerate
/// parameter points for edge-case tests).
ParamSet build_params_unchecked(int n, const mpq_class& sqrt_q, const mpq_class& sqrt_hbar,
                                const std::vector<mpq_class>& sqrt_u,
                                const std::vector<mpq_class>& sqrt_zeta, int theta_terms,
                                int max_degree, Backend backend = Backend::Exact,
                                int precision = 120);

/// Deterministic pseudo-random positive parameters with |q| ~ 1e-2 and
/// |a_i|, |z_i| in [1e-3, 1e-1], retried until generic and numerically
/// well-separated from powers of q.
ParamSet sample_params(int n, std::uint64_t seed, int theta_terms, int max_degree,
                       Backend backend = Backend::Exact, int precision = 120);

/// Description of a vanishing small-exponent monomial, if any.
std::optional<std::string> find_nongeneric_monomial(const ParamSet& p);

}  // namespace fv
