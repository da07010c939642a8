#pragma once

#include <optional>
#include <string>

#include "wreath.hpp"

namespace wh {

/* Disk cache of e_k matrices: one structured text file per (k, degree),
** keyed by the code-version string.  Stale or malformed entries are
** ignored; writes are atomic (write-then-rename). */
class EkDiskCache {
public:
    explicit EkDiskCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<EkBlock> load(int k, int degree) const;
    void store(const EkBlock& block) const;

    std::string path_for(int k, int degree) const;

private:
    std::string dir_;
};

}  // namespace wh
