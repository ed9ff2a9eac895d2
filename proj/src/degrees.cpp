#include "flagvert/degrees.hpp"

#include <algorithm>
#include <numeric>

namespace fv {

int DegreeMatrix::total() const {
  int t = 0;
  for (const auto& row : d) t += std::accumulate(row.begin(), row.end(), 0);
  return t;
}

int DegreeMatrix::row_sum(int i) const {
  const auto& row = d[i - 1];
  return std::accumulate(row.begin(), row.end(), 0);
}

DegreeMatrix DegreeMatrix::zero(int n) {
  DegreeMatrix m;
  for (int i = 1; i < n; ++i) m.d.emplace_back(i, 0);
  return m;
}

bool admissible(const DegreeMatrix& m) {
  for (const auto& row : m.d) {
    for (int x : row)
      if (x < 0) return false;
  }
  // Greedy matching between consecutive rows: sort both descending; walk the
  // longer row, skipping its entries that can't be dominated. Row i must
  // dominate an i-subset of row i+1 termwise after sorting, which the greedy
  // skip realizes exactly (a classical exchange argument; cross-checked
  // against admissible_bruteforce in tests).
  for (size_t i = 0; i + 1 < m.d.size(); ++i) {
    std::vector<int> a = m.d[i], b = m.d[i + 1];
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    size_t ai = 0, skips = 0;
    for (size_t bi = 0; bi < b.size() && ai < a.size(); ++bi) {
      if (a[ai] >= b[bi]) {
        ++ai;
      } else {
        ++skips;
      }
    }
    if (skips > b.size() - a.size() || ai < a.size()) return false;
  }
  return true;
}

bool admissible_bruteforce(const DegreeMatrix& m) {
  for (const auto& row : m.d) {
    for (int x : row)
      if (x < 0) return false;
  }
  for (size_t i = 0; i + 1 < m.d.size(); ++i) {
    const auto& a = m.d[i];
    const auto& b = m.d[i + 1];
    // Try every injection {1..i+1} -> {1..i+2} via permutations of b-indices.
    std::vector<int> idx(b.size());
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    do {
      bool ok = true;
      for (size_t k = 0; k < a.size() && ok; ++k) ok = a[k] >= b[idx[k]];
      found = ok;
    } while (!found && std::next_permutation(idx.begin(), idx.end()));
    if (!found) return false;
  }
  return true;
}

std::vector<DegreeMatrix> enumerate_degrees(int n, int D) {
  std::vector<DegreeMatrix> out;
  DegreeMatrix m = DegreeMatrix::zero(n);
  // Depth-first over the flattened entries with per-row budget D.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= i; ++j) cells.emplace_back(i, j);

  auto rec = [&](auto&& self, size_t c) -> void {
    if (c == cells.size()) {
      if (admissible(m)) out.push_back(m);
      return;
    }
    auto [i, j] = cells[c];
    int used = 0;
    for (int jj = 0; jj < j; ++jj) used += m.d[i][jj];
    for (int v = 0; v <= D - used; ++v) {
      m.d[i][j] = v;
      self(self, c + 1);
    }
    m.d[i][j] = 0;
  };
  rec(rec, 0);

  std::stable_sort(out.begin(), out.end(), [](const DegreeMatrix& x, const DegreeMatrix& y) {
    int tx = x.total(), ty = y.total();
    if (tx != ty) return tx < ty;
    return x.d < y.d;
  });
  return out;
}

}  // namespace fv
