#pragma once

#include <string>

#include "flagvert/params.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/series.hpp"

namespace fv {

/// On-disk memo for truncated series keyed by the recipe that produced them
/// and the full parameter point (including N, D, backend, and precision).
/// The directory comes from the FLAGVERT_CACHE_DIR environment variable by
/// default; an empty directory disables the cache. Entries are written
/// atomically (temp file + rename). Corrupt entries are discarded with a
/// warning on stderr and the value is recomputed. Exact-backend entries
/// round-trip bit-identically.
class SeriesCache {
 public:
  SeriesCache() = default;
  explicit SeriesCache(std::string dir) : dir_(std::move(dir)) {}
  static SeriesCache from_env();

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  /// Stable hex digest of (recipe id, full parameter serialization).
  static std::string key(const std::string& recipe, const ParamSet& p);

  /// True and fills `out` on a clean hit; false on miss or corrupt entry.
  bool load(const std::string& key, const ParamSet& p, TruncatedSeries& out) const;
  void store(const std::string& key, const ParamSet& p, const TruncatedSeries& s) const;

 private:
  std::string dir_;
};

/// Vertex coefficient series for fixed point I, memoized through `cache`.
TruncatedSeries cached_vertex_series(const Perm& I, const ParamSet& p, const SeriesCache& cache);

}  // namespace fv
