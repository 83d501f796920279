#include "cmlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace cmlab {

namespace {
std::filesystem::path g_root;
std::mutex g_mutex;
} // namespace

std::filesystem::path cache_root() {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_root.empty()) return g_root;
    if (const char* env = std::getenv("CMLAB_CACHE_DIR")) return env;
    return "cache";
}

void set_cache_root(const std::filesystem::path& p) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_root = p;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << contents;
        if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace cmlab
