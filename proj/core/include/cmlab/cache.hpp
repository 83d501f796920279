#ifndef CMLAB_CACHE_HPP
#define CMLAB_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace cmlab {

/// Cache root: CMLAB_CACHE_DIR if set, otherwise ./cache.
std::filesystem::path cache_root();
void set_cache_root(const std::filesystem::path& p);

/// Write-temporary-then-rename, so concurrent writers of the same key
/// are idempotent and readers never see partial files.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

std::optional<std::string> read_file(const std::filesystem::path& path);

} // namespace cmlab

#endif
