// Versioned on-disk cache of tensor-product decompositions. One small text
// file per key; entries with a stale version line are recomputed in place.
#pragma once

#include <filesystem>
#include <string>

#include "beurling/lie_repr.hpp"

namespace beurling {

inline constexpr const char* kCacheEnvVar = "BEURLING_CACHE_DIR";

class LrCache {
public:
    explicit LrCache(std::filesystem::path root);

    TensorDecomposition get_or_compute(const DominantWeight& lambda, const DominantWeight& mu,
                                       const EnumerationBudget& budget = {});

    // Precedence: explicit flag, then $BEURLING_CACHE_DIR, then the per-user
    // data directory ($XDG_DATA_HOME or ~/.local/share) under beurling/lr.
    static std::filesystem::path resolve_directory(const std::string& flag_value);

    const std::filesystem::path& root() const { return root_; }
    void clear();

private:
    std::filesystem::path root_;

    std::filesystem::path entry_path(const DominantWeight& lambda, const DominantWeight& mu) const;
};

}  // namespace beurling
