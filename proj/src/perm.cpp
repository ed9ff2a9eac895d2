#include "flagvert/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flagvert/errors.hpp"

namespace fv {

Perm::Perm(std::vector<int> one_line) : v(std::move(one_line)) {
  std::vector<int> seen(v.size(), 0);
  for (int x : v) {
    if (x < 1 || x > n() || seen[x - 1]++) throw ConfigError("not a permutation: " + str());
  }
}

Perm Perm::inv() const {
  std::vector<int> w(v.size());
  for (int k = 1; k <= n(); ++k) w[v[k - 1] - 1] = k;
  Perm p;
  p.v = std::move(w);
  return p;
}

int Perm::non_inversions() const {
  int c = 0;
  for (int j = 0; j < n(); ++j)
    for (int k = j + 1; k < n(); ++k) c += v[j] < v[k];
  return c;
}

int Perm::inversions() const { return n() * (n() - 1) / 2 - non_inversions(); }

int Perm::sign() const { return inversions() % 2 ? -1 : 1; }

int Perm::ordered_index(int k, int a) const {
  std::vector<int> s(v.begin(), v.begin() + k);
  std::sort(s.begin(), s.end());
  return s[a - 1];
}

int Perm::j_index(int k, int a) const {
  int target = ordered_index(k, a);
  for (int j = 1; j <= k; ++j)
    if (v[j - 1] == target) return j;
  return 0;  // unreachable
}

std::string Perm::str() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

Perm Perm::parse(const std::string& s) {
  std::istringstream is(s);
  std::vector<int> w;
  int x;
  while (is >> x) w.push_back(x);
  return Perm(std::move(w));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p;
    p.v = v;
    out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool preceq(const Perm& I, const Perm& J) {
  int n = I.n();
  std::vector<int> si, sj;
  for (int k = 0; k + 1 < n; ++k) {
    si.insert(std::upper_bound(si.begin(), si.end(), I.v[k]), I.v[k]);
    sj.insert(std::upper_bound(sj.begin(), sj.end(), J.v[k]), J.v[k]);
    for (int m = 0; m <= k; ++m) {
      if (si[m] > sj[m]) return false;
    }
  }
  return true;
}

bool precedes(const Perm& I, const Perm& J) { return I != J && preceq(I, J); }

std::vector<Perm> total_order(int n) {
  // Kahn's algorithm over the precedes relation; the ready set is kept
  // sorted so ties break lexicographically.
  auto perms = all_perms(n);  // already lexicographic
  size_t m = perms.size();
  std::vector<int> indeg(m, 0);
  std::vector<std::vector<size_t>> succ(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i != j && precedes(perms[i], perms[j])) {
        succ[i].push_back(j);
        ++indeg[j];
      }
    }
  }
  std::vector<size_t> ready;
  for (size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::vector<Perm> out;
  while (!ready.empty()) {
    size_t i = *std::min_element(ready.begin(), ready.end());
    ready.erase(std::find(ready.begin(), ready.end(), i));
    out.push_back(perms[i]);
    for (size_t j : succ[i]) {
      if (--indeg[j] == 0) ready.push_back(j);
    }
  }
  return out;
}

}  // namespace fv
