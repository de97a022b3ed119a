#include "sheafcx/cache.hpp"

#include "sheafcx/errors.hpp"
#include "sheafcx/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <sys/file.h>
#include <unistd.h>

namespace sheafcx {

namespace fs = std::filesystem;

namespace {

class WriterLock {
public:
    explicit WriterLock(const fs::path& file) {
        const std::string path = file.string() + ".lock";
        fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
        if (fd_ < 0) throw ResourceError("cannot open lock file " + path);
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw ResourceError("cannot lock " + path);
        }
    }
    ~WriterLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    WriterLock(const WriterLock&) = delete;
    WriterLock& operator=(const WriterLock&) = delete;

private:
    int fd_;
};

Json document(const MonomialIdeal& ideal, const std::map<int, PowerEntry>& entries) {
    Json doc = ideal_json(ideal);
    doc["key"] = canonical_key(ideal);
    doc["entries"] = power_entries_json(entries);
    return doc;
}

}  // namespace

std::optional<fs::path> default_cache_dir() {
    const char* env = std::getenv("SHEAFCX_CACHE_DIR");
    if (!env || !*env) return std::nullopt;
    return fs::path(env);
}

fs::path cache_file(const fs::path& dir, const MonomialIdeal& ideal) {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(canonical_hash(ideal)));
    return dir / name;
}

std::map<int, PowerEntry> read_cache(const fs::path& file, const MonomialIdeal& ideal) {
    std::ifstream in(file);
    if (!in) return {};
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IntegrityError("cache file " + file.string() + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || doc.value("key", std::string{}) != canonical_key(ideal))
        throw IntegrityError("cache file " + file.string() + " records a different ideal");
    if (!doc.contains("entries")) return {};
    return power_entries_from_json(doc["entries"]);
}

std::map<int, PowerEntry> merge_entries(const std::map<int, PowerEntry>& stored,
                                        const std::map<int, PowerEntry>& fresh) {
    auto merged = stored;
    for (const auto& [p, e] : fresh) {
        auto [it, inserted] = merged.emplace(p, e);
        if (!inserted && !it->second.same_values(e))
            throw IntegrityError("cache conflict at p = " + std::to_string(p) + ": stored (d=" +
                                 std::to_string(it->second.dp) + ", reg=" +
                                 std::to_string(it->second.regp) + "), new (d=" +
                                 std::to_string(e.dp) + ", reg=" + std::to_string(e.regp) + ")");
    }
    return merged;
}

std::map<int, PowerEntry> write_cache(const fs::path& file, const MonomialIdeal& ideal,
                                      const std::map<int, PowerEntry>& entries) {
    std::error_code ec;
    if (file.has_parent_path()) fs::create_directories(file.parent_path(), ec);
    if (ec) throw ResourceError("cannot create cache directory: " + ec.message());

    WriterLock lock(file);
    const auto merged = merge_entries(read_cache(file, ideal), entries);
    const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ResourceError("cannot write " + tmp.string());
        out << document(ideal, merged).dump(2) << '\n';
        if (!out) throw ResourceError("short write to " + tmp.string());
    }
    fs::rename(tmp, file, ec);
    if (ec) throw ResourceError("cannot replace " + file.string() + ": " + ec.message());
    return merged;
}

}  // namespace sheafcx
