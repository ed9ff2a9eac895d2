// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit if
// any criterion fails.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "flagvert/mirror.hpp"
#include "flagvert/params.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/report.hpp"
#include "flagvert/verify.hpp"

using namespace fv;

namespace {

int g_fails = 0;

void emit(int k, bool pass, const std::string& desc) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", k, desc.c_str());
  std::fflush(stdout);
  if (!pass) ++g_fails;
}

ParamSet params(int n, std::uint64_t seed, int D) {
  return sample_params(n, seed, /*theta_terms=*/40, D, Backend::Float, /*precision=*/120);
}

bool claims_pass(const Report& r, const std::string& id_substr = "") {
  bool any = false;
  for (const auto& c : r.claims) {
    if (!id_substr.empty() && c.id.find(id_substr) == std::string::npos) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

double claim_residual(const Report& r) {
  double worst = 0;
  for (const auto& c : r.claims) worst = std::max(worst, c.residual);
  return worst;
}

template <typename F>
void criterion(int k, const std::string& desc, F body) {
  try {
    emit(k, body(), desc);
  } catch (const std::exception& e) {
    emit(k, false, desc + " (exception: " + e.what() + ")");
  }
}

}  // namespace

int main() {
  criterion(1, "triangularity of all restriction matrices, n = 2, 3, 4", [] {
    for (int n = 2; n <= 4; ++n)
      if (!claims_pass(verify_triangularity(params(n, 7, 4)))) return false;
    return true;
  });

  criterion(2, "diagonal restrictions equal the closed theta product, n <= 4", [] {
    for (int n = 2; n <= 4; ++n)
      if (!claims_pass(verify_diagonal(params(n, 7, 4)), "envelope/diagonal/")) return false;
    return true;
  });

  criterion(3,
            "diagonal row constant equals (-1)^{n(n-1)/2} (-1)^I, n = 2, 3 "
            "(the alternative global sign is reported in claim notes, not failed)",
            [] {
              for (int n = 2; n <= 3; ++n)
                if (!claims_pass(verify_diagonal(params(n, 7, 4)), "diagonal-sign")) return false;
              return true;
            });

  criterion(4, "quasi-periodicity of the normalized weight function, n = 2, 3", [] {
    for (int n = 2; n <= 3; ++n)
      if (!claims_pass(verify_quasiperiodicity(params(n, 7, 4), 0x51ab))) return false;
    return true;
  });

  criterion(5, "Kaehler-side Macdonald eigenproperty, n = 2 (D = 6), n = 3 (D = 4), r = 1..n", [] {
    return claims_pass(verify_macdonald(params(2, 7, 6)), "zeta-eigencheck") &&
           claims_pass(verify_macdonald(params(3, 7, 4)), "zeta-eigencheck");
  });

  criterion(6, "equivariant-side Macdonald eigenproperty, same grid", [] {
    return claims_pass(verify_macdonald(params(2, 7, 6)), "u-eigencheck") &&
           claims_pass(verify_macdonald(params(3, 7, 4)), "u-eigencheck");
  });

  criterion(7,
            "chamber limit: closed form coefficient-wise to D = 6 and decay slope "
            ">= 1 decade/decade, n = 2, 3",
            [] {
              for (int n = 2; n <= 3; ++n) {
                ParamSet p = params(n, 7, 6);
                for (const Perm& I : all_perms(n))
                  if (!claims_pass(verify_limits(I, p))) return false;
              }
              return true;
            });

  criterion(8,
            "main transition-matrix theorem, n = 2 (D = 8) and n = 3 (D = 5), "
            "two seeds, both normalizations; residual shrinks when D -> D+2",
            [] {
              for (int n : {2, 3}) {
                int D = n == 2 ? 8 : 5;
                for (std::uint64_t seed : {7ULL, 11ULL}) {
                  ParamSet p = params(n, seed, D);
                  for (const Perm& I : all_perms(n)) {
                    if (!claims_pass(verify_main_theorem(I, p, TheoremForm::Overline)))
                      return false;
                    if (!claims_pass(verify_main_theorem(I, p, TheoremForm::Bold))) return false;
                  }
                }
                // representative fixed point: residual must shrink with D -> D+2
                Perm I = all_perms(n)[1];
                double r0 = claim_residual(verify_main_theorem(I, params(n, 7, D),
                                                               TheoremForm::Overline));
                double r1 = claim_residual(verify_main_theorem(I, params(n, 7, D + 2),
                                                               TheoremForm::Overline));
                if (!(r1 < r0)) return false;
              }
              return true;
            });

  criterion(9, "stable-envelope inverse matrix equals the identity, n = 2, 3, two seeds", [] {
    for (int n : {2, 3})
      for (std::uint64_t seed : {7ULL, 11ULL})
        if (!claims_pass(verify_stab_inverse(params(n, seed, 4)))) return false;
    return true;
  });

  criterion(10,
            "oracles: admissibility matches brute force (n <= 4), rank-two vertex "
            "matches the closed form, polarization identity for all I (n <= 4)",
            [] {
              for (int n = 2; n <= 4; ++n)
                if (!claims_pass(verify_oracles(params(n, 7, 4)))) return false;
              return true;
            });

  if (g_fails) std::printf("%d criterion(s) failed\n", g_fails);
  return g_fails ? 1 : 0;
}
