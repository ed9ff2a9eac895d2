#include "flagvert/params.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "flagvert/errors.hpp"
#include "flagvert/tomlite.hpp"

namespace fv {

namespace {

// ---------------------------------------------------------------------------
// Exact multiplicative-relation detection.
//
// The generators are nonzero rationals. A monomial in them equals 1 only if
// the exponent vector lies in the integer kernel of the exponent matrix of
// the generators over a coprime base of all numerators and denominators
// (plus a sign condition). The coprime base is produced by gcd refinement,
// no factoring needed.
// ---------------------------------------------------------------------------

std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& xs) {
  std::vector<mpz_class> base;
  for (const mpz_class& x : xs) {
    mpz_class y = abs(x);
    if (y > 1) base.push_back(y);
  }
  // Refine by gcd splitting until pairwise coprime. Base elements need not be
  // prime; each input is then a product of powers of base elements.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < base.size() && !changed; ++i) {
      for (size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_class g = gcd(base[i], base[j]);
        if (g == 1) continue;
        mpz_class bi = base[i], bj = base[j];
        base.erase(base.begin() + j);
        base.erase(base.begin() + i);
        for (const mpz_class& piece : {mpz_class(bi / g), mpz_class(bj / g), g}) {
          if (piece > 1) base.push_back(piece);
        }
        changed = true;
      }
    }
  }
  return base;
}

long valuation(mpz_class x, const mpz_class& b) {
  long v = 0;
  x = abs(x);
  while (x > 1 && x % b == 0) {
    x /= b;
    ++v;
  }
  return v;
}

// Rows: one exponent vector (over the coprime base) per generator.
std::vector<std::vector<long>> exponent_matrix(const std::vector<mpq_class>& gens,
                                               const std::vector<mpz_class>& base) {
  std::vector<std::vector<long>> m;
  for (const auto& g : gens) {
    std::vector<long> row(base.size(), 0);
    for (size_t b = 0; b < base.size(); ++b) {
      row[b] = valuation(g.get_num(), base[b]) - valuation(g.get_den(), base[b]);
    }
    m.push_back(std::move(row));
  }
  return m;
}

// Integer basis of the left kernel {e : e*A = 0} via elimination on [A | I].
std::vector<std::vector<long>> left_kernel(const std::vector<std::vector<long>>& a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + rows, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols + i] = 1;
  }
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (size_t j = 0; j < cols + rows; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  std::vector<std::vector<long>> kernel;
  for (size_t i = r; i < rows; ++i) {
    // Zero A-part; the tracking part is a rational kernel vector. Scale to
    // a primitive integer vector.
    mpz_class lcm_den = 1;
    for (size_t j = 0; j < rows; ++j) lcm_den = lcm(lcm_den, m[i][cols + j].get_den());
    std::vector<mpz_class> v(rows);
    mpz_class content = 0;
    for (size_t j = 0; j < rows; ++j) {
      v[j] = m[i][cols + j].get_num() * (lcm_den / m[i][cols + j].get_den());
      content = gcd(content, v[j]);
    }
    if (content == 0) continue;
    std::vector<long> out(rows);
    for (size_t j = 0; j < rows; ++j) out[j] = mpz_class(v[j] / content).get_si();
    kernel.push_back(std::move(out));
  }
  return kernel;
}

std::string describe_monomial(const std::vector<long>& e, int n) {
  std::ostringstream os;
  auto name = [&](size_t idx) -> std::string {
    if (idx == 0) return "sqrt_q";
    if (idx == 1) return "sqrt_hbar";
    if (idx < static_cast<size_t>(2 + n)) return "sqrt_u[" + std::to_string(idx - 1) + "]";
    return "sqrt_zeta[" + std::to_string(idx - n - 1) + "]";
  };
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << " * ";
    os << name(i) << "^" << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

int sign_of(const mpq_class& q) { return sgn(q) < 0 ? -1 : 1; }

}  // namespace

std::optional<std::string> find_nongeneric_monomial(const ParamSet& p) {
  std::vector<mpq_class> gens{p.g_q, p.g_hbar};
  gens.insert(gens.end(), p.g_u.begin(), p.g_u.end());
  gens.insert(gens.end(), p.g_zeta.begin(), p.g_zeta.end());

  std::vector<mpz_class> parts;
  for (const auto& g : gens) {
    parts.push_back(g.get_num());
    parts.push_back(g.get_den());
  }
  auto base = coprime_base(parts);
  auto kernel = left_kernel(exponent_matrix(gens, base));
  if (kernel.empty()) return std::nullopt;

  long bound = 2L * p.max_degree + 2L * p.n;
  auto check = [&](std::vector<long> e) -> std::optional<std::string> {
    long mx = 0;
    bool nonzero = false;
    int sign = 1;
    for (size_t i = 0; i < e.size(); ++i) {
      mx = std::max(mx, std::abs(e[i]));
      if (e[i] != 0) nonzero = true;
      if (e[i] % 2 != 0 && sign_of(gens[i]) < 0) sign = -sign;
    }
    if (!nonzero || mx > bound) return std::nullopt;
    if (sign < 0) {
      // Magnitude 1 with sign -1: the squared monomial equals 1.
      for (auto& x : e) x *= 2;
      if (2 * mx > bound) return std::nullopt;
    }
    return describe_monomial(e, p.n);
  };

  size_t k = kernel.size();
  size_t m = kernel[0].size();
  // Basis vectors themselves are usually already witnesses.
  for (const auto& v : kernel) {
    if (auto hit = check(v)) return hit;
  }
  // Bounded scan over small integer combinations.
  double total = std::pow(7.0, static_cast<double>(k));
  if (total <= 2e6) {
    std::vector<long> combo(k, -3);
    while (true) {
      std::vector<long> e(m, 0);
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < m; ++j) e[j] += combo[i] * kernel[i][j];
      }
      if (auto hit = check(e)) return hit;
      size_t i = 0;
      while (i < k && ++combo[i] > 3) combo[i++] = -3;
      if (i == k) break;
    }
  }
  return std::nullopt;
}

Scalar ParamSet::from_rat(const mpq_class& r) const {
  if (backend == Backend::Exact) return Scalar::exact(r);
  return Scalar::floating(r, precision);
}

Scalar ParamSet::tol() const { return Scalar(100) * q.abs().pow(theta_terms - 1); }

ParamSet ParamSet::rederive(ParamSet p) {
  p.sqrt_q = p.from_rat(p.g_q);
  p.sqrt_hbar = p.from_rat(p.g_hbar);
  p.q = p.sqrt_q * p.sqrt_q;
  p.hbar = p.sqrt_hbar * p.sqrt_hbar;
  p.sqrt_u.clear();
  p.sqrt_zeta.clear();
  p.u.clear();
  p.zeta.clear();
  for (int i = 0; i < p.n; ++i) {
    p.sqrt_u.push_back(p.from_rat(p.g_u[i]));
    p.sqrt_zeta.push_back(p.from_rat(p.g_zeta[i]));
    p.u.push_back(p.sqrt_u[i] * p.sqrt_u[i]);
    p.zeta.push_back(p.sqrt_zeta[i] * p.sqrt_zeta[i]);
  }
  p.a.clear();
  p.z.clear();
  for (int i = 0; i + 1 < p.n; ++i) {
    p.a.push_back(p.u[i] / p.u[i + 1]);
    p.z.push_back((p.q / p.hbar) * p.zeta[i] / p.zeta[i + 1]);
  }
  return p;
}

ParamSet ParamSet::shifted_u(int i) const {
  ParamSet p = *this;
  p.g_u[i - 1] *= g_q;
  return rederive(std::move(p));
}

ParamSet ParamSet::shifted_zeta(int i) const {
  ParamSet p = *this;
  p.g_zeta[i - 1] *= g_q;
  return rederive(std::move(p));
}

ParamSet ParamSet::with_backend(Backend b, int precision_digits) const {
  ParamSet p = *this;
  p.backend = b;
  p.precision = precision_digits;
  return rederive(std::move(p));
}

ParamSet ParamSet::with_theta_terms(int N) const {
  ParamSet p = *this;
  p.theta_terms = N;
  return p;
}

ParamSet ParamSet::with_max_degree(int D) const {
  ParamSet p = *this;
  p.max_degree = D;
  return p;
}

ParamSet build_params_unchecked(int n, const mpq_class& sqrt_q, const mpq_class& sqrt_hbar,
                                const std::vector<mpq_class>& sqrt_u,
                                const std::vector<mpq_class>& sqrt_zeta, int theta_terms,
                                int max_degree, Backend backend, int precision) {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (static_cast<int>(sqrt_u.size()) != n || static_cast<int>(sqrt_zeta.size()) != n)
    throw ConfigError("need n square-root generators for u and zeta");
  if (theta_terms < 1) throw ConfigError("theta_terms must be positive");
  if (max_degree < 0) throw ConfigError("max_degree must be nonnegative");
  if (sqrt_q == 0 || sqrt_hbar == 0) throw ConfigError("square-root generators must be nonzero");
  for (const auto& g : sqrt_u)
    if (g == 0) throw ConfigError("square-root generators must be nonzero");
  for (const auto& g : sqrt_zeta)
    if (g == 0) throw ConfigError("square-root generators must be nonzero");
  if (abs(sqrt_q) >= 1) throw DegenerateModulus("|q| must be < 1, got sqrt_q = " + sqrt_q.get_str());

  ParamSet p;
  p.n = n;
  p.backend = backend;
  p.precision = precision;
  p.theta_terms = theta_terms;
  p.max_degree = max_degree;
  p.g_q = sqrt_q;
  p.g_hbar = sqrt_hbar;
  p.g_u = sqrt_u;
  p.g_zeta = sqrt_zeta;
  for (auto* v : {&p.g_u, &p.g_zeta}) {
    for (auto& g : *v) g.canonicalize();
  }
  p.g_q.canonicalize();
  p.g_hbar.canonicalize();
  return ParamSet::rederive(std::move(p));
}

ParamSet build_params(int n, const mpq_class& sqrt_q, const mpq_class& sqrt_hbar,
                      const std::vector<mpq_class>& sqrt_u, const std::vector<mpq_class>& sqrt_zeta,
                      int theta_terms, int max_degree, Backend backend, int precision) {
  ParamSet p = build_params_unchecked(n, sqrt_q, sqrt_hbar, sqrt_u, sqrt_zeta, theta_terms,
                                      max_degree, backend, precision);
  if (auto bad = find_nongeneric_monomial(p)) {
    throw NonGenericParameters("vanishing monomial: " + *bad + " = 1");
  }
  return p;
}

namespace {

// Rejects parameter points whose critical ratios sit numerically close to a
// power of q; exact genericity alone does not protect the conditioning of
// Pochhammer denominators and theta ratios.
bool well_separated(const ParamSet& p) {
  double lq = std::log(std::abs(p.q.to_double()));
  auto near_q_power = [&](double x) {
    if (x <= 0) return true;
    double d = std::log(x) / lq;
    return std::abs(d - std::round(d)) * std::abs(lq) < 0.05;
  };
  std::vector<double> crit;
  int n = p.n;
  std::vector<double> ud(n), zd(n);
  for (int i = 0; i < n; ++i) {
    ud[i] = p.u[i].to_double();
    zd[i] = p.zeta[i].to_double();
  }
  double hb = p.hbar.to_double();
  crit.push_back(hb);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      crit.push_back(ud[i] / ud[j]);
      crit.push_back(hb * ud[i] / ud[j]);
      crit.push_back(zd[i] / ud[j]);
      if (i < j) crit.push_back(zd[i] / zd[j]);
    }
  }
  // mu-ratios mu_j/mu_{k+1} = prod_{m=j..k} hbar z_m, optionally divided by hbar.
  for (int j = 1; j <= n - 1; ++j) {
    double prod = 1;
    for (int k = j; k <= n - 1; ++k) {
      prod *= hb * p.z[k - 1].to_double();
      crit.push_back(prod);
      crit.push_back(prod / hb);
    }
  }
  // Tautological line bundle restrictions (all i-element u-products), bare
  // and multiplied by z_i: theta denominators of the e-factor.
  for (int sz = 1; sz <= n - 1; ++sz) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != sz) continue;
      double prod = 1;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) prod *= ud[i];
      crit.push_back(prod);
      crit.push_back(1.0 / prod);
      crit.push_back(prod * p.z[sz - 1].to_double());
    }
  }
  for (double x : crit) {
    if (near_q_power(std::abs(x))) return false;
  }
  return true;
}

}  // namespace

ParamSet sample_params(int n, std::uint64_t seed, int theta_terms, int max_degree, Backend backend,
                       int precision) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto draw = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  for (int attempt = 0; attempt < 64; ++attempt) {
    mpq_class sq(draw(95, 105), 1000);
    mpq_class sh(draw(200, 300), 1000);
    std::vector<mpq_class> sa(n - 1), sz(n - 1);
    for (auto& x : sa) x = mpq_class(draw(2450, 3162), 10000);
    for (auto& x : sz) x = mpq_class(draw(2450, 3162), 10000);

    // Center the u-chain so that u-products stay moderate.
    int mid = (n - 1) / 2;
    std::vector<mpq_class> su(n);
    su[mid] = mpq_class(draw(900, 1100), 1000);
    for (int i = mid - 1; i >= 0; --i) su[i] = su[i + 1] * sa[i];
    for (int i = mid + 1; i < n; ++i) su[i] = su[i - 1] / sa[i - 1];

    std::vector<mpq_class> szeta(n);
    szeta[n - 1] = mpq_class(draw(900, 1100), 1000);
    for (int i = n - 2; i >= 0; --i) szeta[i] = (sh / sq) * sz[i] * szeta[i + 1];

    for (auto* v : {&su, &szeta}) {
      for (auto& g : *v) g.canonicalize();
    }
    ParamSet p = build_params_unchecked(n, sq, sh, su, szeta, theta_terms, max_degree, backend,
                                        precision);
    if (find_nongeneric_monomial(p)) continue;
    if (!well_separated(p)) continue;
    return p;
  }
  throw GenericityExhausted("no generic parameter point found for seed " + std::to_string(seed));
}

std::string ParamSet::to_toml() const {
  std::ostringstream os;
  os << "[params]\n";
  os << "n = " << n << "\n";
  os << "backend = \"" << (backend == Backend::Exact ? "exact" : "float") << "\"\n";
  os << "precision = " << precision << "\n";
  os << "theta_terms = " << theta_terms << "\n";
  os << "max_degree = " << max_degree << "\n";
  os << "sqrt_q = \"" << g_q.get_str() << "\"\n";
  os << "sqrt_hbar = \"" << g_hbar.get_str() << "\"\n";
  auto arr = [&](const char* key, const std::vector<mpq_class>& v) {
    os << key << " = [";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << "\"" << v[i].get_str() << "\"";
    os << "]\n";
  };
  arr("sqrt_u", g_u);
  arr("sqrt_zeta", g_zeta);
  return os.str();
}

ParamSet ParamSet::from_toml(const std::string& text) {
  auto doc = tomlite::parse(text);
  auto rat = [](const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw ConfigError("bad rational: " + s);
    r.canonicalize();
    return r;
  };
  int n = static_cast<int>(doc.get_int("params.n", 0));
  std::vector<mpq_class> su, szeta;
  for (const auto& s : doc.get_array("params.sqrt_u")) su.push_back(rat(s));
  for (const auto& s : doc.get_array("params.sqrt_zeta")) szeta.push_back(rat(s));
  Backend b = Backend::Exact;
  if (doc.has("params.backend") && doc.get_string("params.backend") == "float") b = Backend::Float;
  return build_params(n, rat(doc.get_string("params.sqrt_q")), rat(doc.get_string("params.sqrt_hbar")),
                      su, szeta, static_cast<int>(doc.get_int("params.theta_terms", 40)),
                      static_cast<int>(doc.get_int("params.max_degree", 6)), b,
                      static_cast<int>(doc.get_int("params.precision", 120)));
}

}  // namespace fv
