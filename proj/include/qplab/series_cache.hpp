#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qplab/partitions.hpp"

namespace qplab {

// On-disk cache of partition series: one file per canonical multiset,
// newline-delimited "n,value" rows starting at n=0, append-only. Files
// that fail validation are silently recomputed and rewritten; the cache
// is advisory, never authoritative.
class SeriesCache {
public:
    // Disabled cache: get() always computes.
    SeriesCache() = default;
    explicit SeriesCache(std::filesystem::path dir);

    // Flag value beats the QPLAB_CACHE_DIR environment variable; with
    // neither present the cache is disabled.
    static SeriesCache resolve(const std::optional<std::string>& flag_dir);

    bool enabled() const { return !dir_.empty(); }
    std::filesystem::path file_for(const Multiset& A) const;

    // p_A(0..N), from disk when the file covers N, computed (and the file
    // extended) otherwise.
    std::vector<Int> get(const Multiset& A, long N) const;

private:
    std::filesystem::path dir_;
};

}  // namespace qplab
