#pragma once

#include <vector>

namespace fv {

/// Quasimap degree data: nonnegative integers d[i][j] for i = 1..n-1,
/// j = 1..i (row i has i entries), stored 0-based as a ragged array.
struct DegreeMatrix {
  std::vector<std::vector<int>> d;  // d[i].size() == i+1

  int n() const { return static_cast<int>(d.size()) + 1; }
  int total() const;
  int row_sum(int i) const;  // 1-based row
  static DegreeMatrix zero(int n);

  bool operator==(const DegreeMatrix&) const = default;
  auto operator<=>(const DegreeMatrix&) const = default;
};

/// Membership in the degree cone: all entries >= 0 and each consecutive row
/// pair admits an injection j: {1..i} -> {1..i+1} with d[i][k] >= d[i+1][j_k].
bool admissible(const DegreeMatrix& m);
/// Exponential-time reference check (all injections), for cross-validation.
bool admissible_bruteforce(const DegreeMatrix& m);

/// All admissible matrices with row_sum(i) <= D for every i, sorted by total
/// degree then lexicographically on the flattened entries.
std::vector<DegreeMatrix> enumerate_degrees(int n, int D);

}  // namespace fv
