#pragma once

#include <string>
#include <vector>

namespace fv {

/// A permutation I of {1,...,n} in one-line notation, I = (I_1,...,I_n),
/// identified with the torus fixed point whose k-th flag step is spanned by
/// coordinate lines I_1,...,I_k.
struct Perm {
  std::vector<int> v;  // 1-based values

  Perm() = default;
  explicit Perm(std::vector<int> one_line);

  int n() const { return static_cast<int>(v.size()); }
  int operator[](int k) const { return v[k - 1]; }  // 1-based

  /// Inverse permutation: inv()[I_k] = k.
  Perm inv() const;
  /// Number of non-inversions: pairs j < k with I_j < I_k.
  int non_inversions() const;
  /// Number of inversions: pairs j < k with I_j > I_k.
  int inversions() const;
  /// Sign (-1)^inversions.
  int sign() const;
  /// a-th smallest value among {I_1,...,I_k} (written i^{(k)}_a). 1-based.
  int ordered_index(int k, int a) const;
  /// The position j <= k with I_j = ordered_index(k, a).
  int j_index(int k, int a) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  std::string str() const;                    // "2 3 1"
  static Perm parse(const std::string& s);    // inverse of str()
};

std::vector<Perm> all_perms(int n);

/// Partial order used for triangularity: I <= J iff the componentwise
/// comparison of cumulative index sets holds, i.e. the sorted first k values
/// of I are termwise <= those of J for every k.
bool preceq(const Perm& I, const Perm& J);
bool precedes(const Perm& I, const Perm& J);  // preceq and I != J

/// A linear extension of precedes, deterministic (lexicographic tie-break).
std::vector<Perm> total_order(int n);

}  // namespace fv
