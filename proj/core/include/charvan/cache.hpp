#pragma once

#include "charvan/chartable.hpp"
#include "charvan/group.hpp"

#include <optional>
#include <string>

namespace charvan {

// SHA-256 hex of (format-version byte || degree || sorted generator image
// sequences); identifies a group presentation for the table cache.
std::string group_cache_key(const PermGroup& g);

// One file per group under dir, named <key>.json. A version mismatch or any
// inconsistency with the freshly computed class data ignores the cache entry.
std::optional<CharacterTable> load_cached_table(const std::string& dir,
                                                const PermGroup& g,
                                                std::shared_ptr<const ClassData> cd);

void store_cached_table(const std::string& dir, const PermGroup& g,
                        const CharacterTable& table, const std::string& name);

} // namespace charvan
