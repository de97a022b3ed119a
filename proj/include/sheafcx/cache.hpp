#pragma once

// On-disk power-sequence cache: one JSON file per ideal, named by the hash of
// its canonical key, holding the ring, generators and the p -> (d_p, reg_p)
// entries. Writes merge with what is on disk and replace the file atomically;
// a lock file serializes writers.

#include "sheafcx/ideal.hpp"
#include "sheafcx/sestimator.hpp"

#include <filesystem>
#include <map>
#include <optional>

namespace sheafcx {

/// SHEAFCX_CACHE_DIR, if set and nonempty.
std::optional<std::filesystem::path> default_cache_dir();

std::filesystem::path cache_file(const std::filesystem::path& dir, const MonomialIdeal& ideal);

/// Entries stored for `ideal`; empty if the file does not exist. Throws
/// IntegrityError if the file is malformed or records a different ideal.
std::map<int, PowerEntry> read_cache(const std::filesystem::path& file, const MonomialIdeal& ideal);

/// Merges `entries` into the file and returns the merged map. Throws
/// IntegrityError, naming both values, if a stored p disagrees.
std::map<int, PowerEntry> write_cache(const std::filesystem::path& file, const MonomialIdeal& ideal,
                                      const std::map<int, PowerEntry>& entries);

/// Pure merge used by write_cache.
std::map<int, PowerEntry> merge_entries(const std::map<int, PowerEntry>& stored,
                                        const std::map<int, PowerEntry>& fresh);

}  // namespace sheafcx
