#pragma once

// File-backed reuse of computed Groebner bases plus an in-memory memo for
// sealed rings. The file cache is advisory: a miss recomputes, a hit can be
// byte-verified against a recomputation on demand.

#include "grassmann.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

namespace grasschar {

class cache_mismatch_error : public std::runtime_error {
public:
    explicit cache_mismatch_error(const std::string& path,
                                  const std::string& why = "does not match recomputation")
        : std::runtime_error("cache file " + why + ": " + path) {}
};

/// Resolution order for the cache directory: explicit flag, then the
/// GRASSCHAR_CACHE_DIR environment variable, then the platform cache home.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("GRASSCHAR_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "grasschar";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "grasschar";
    return std::filesystem::path(".grasschar-cache");
}

struct CacheConfig {
    std::filesystem::path dir;  // empty disables file IO
    bool use_files = true;      // false: recompute everything, touch no files
    bool verify = false;        // true: byte-compare hits against recomputation
};

inline std::string cache_file_borel(int n, int k) {
    return "gb/borel_n" + std::to_string(n) + "_k" + std::to_string(k) + ".txt";
}
inline std::string cache_file_image(int n) {
    return "gb/imageJ_n" + std::to_string(n) + ".txt";
}
inline std::string cache_file_oriented(const GrassmannParams& p) {
    return "gb/oriented_t" + std::to_string(p.t) + "_" + std::string(to_string(p.ring_case)) +
           "_g" + std::to_string(p.gamma) + ".txt";
}

/// Builds rings through the file cache and memoizes sealed rings in memory.
/// Sealed rings are immutable, so handing the same shared instance to
/// several consumers is safe.
class RingCache {
public:
    RingCache() : cfg_{{}, false, false} {}
    explicit RingCache(CacheConfig cfg) : cfg_(std::move(cfg)) {}

    const CacheConfig& config() const noexcept { return cfg_; }

    /// seal_to < 0 returns a fresh unsealed ring (not memoized).
    RingPtr borel(int n, int k, int seal_to = -1) {
        return ring(cache_file_borel(n, k), seal_to, k * (n - k), borel_table(k),
                    [&] { return borel_ring(n, k); });
    }

    RingPtr image(int n, int seal_to = -1) {
        return ring(cache_file_image(n), seal_to, std::nullopt, image_table(),
                    [&] { return image_ring(n); });
    }

    RingPtr oriented(const GrassmannParams& p, int seal_to = -1) {
        const auto expected =
            make_table({{"a", (1 << p.t) - 4}, {"w2", 2}, {"w3", 3}});
        return ring(cache_file_oriented(p), seal_to, p.top_degree(), expected,
                    [&] { return oriented_ring(p); });
    }

    /// Not file-backed (cheap to rebuild); still memoized when sealed.
    RingPtr oriented_k2(int t, int seal_to = -1) {
        const std::string key = "k2_t" + std::to_string(t);
        if (seal_to >= 0) {
            auto it = mem_.find(key + "@" + std::to_string(seal_to));
            if (it != mem_.end()) return it->second;
        }
        auto r = grasschar::oriented_ring_k2(t);
        if (seal_to < 0) return r;
        r->seal(seal_to);
        mem_.emplace(key + "@" + std::to_string(seal_to), r);
        return r;
    }

private:
    RingPtr ring(const std::string& relpath, int seal_to, std::optional<int> hint,
                 const TablePtr& expected_table, const std::function<RingPtr()>& build) {
        const std::string mem_key = relpath + "@" + std::to_string(seal_to);
        if (seal_to >= 0)
            if (auto it = mem_.find(mem_key); it != mem_.end()) return it->second;

        RingPtr result;
        const bool file_backed = cfg_.use_files && !cfg_.dir.empty();
        const std::filesystem::path path = cfg_.dir / relpath;
        if (file_backed && std::filesystem::exists(path)) {
            const std::string text = read_file(path);
            GroebnerBasis gb = parse_groebner(text);
            if (gb.table() != *expected_table)
                throw cache_mismatch_error(path.string(), "has the wrong variable table");
            if (cfg_.verify) {
                RingPtr fresh = build();
                if (serialize(fresh->groebner()) != text)
                    throw cache_mismatch_error(path.string());
                result = fresh;
            } else {
                result = std::make_shared<GradedQuotient>(std::move(gb), hint);
            }
        } else {
            result = build();
            if (file_backed) write_file(path, serialize(result->groebner()));
        }
        if (seal_to >= 0) {
            result->seal(seal_to);
            mem_.emplace(mem_key, result);
        }
        return result;
    }

    static std::string read_file(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read cache file " + path.string());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return text;
    }

    static void write_file(const std::filesystem::path& path, const std::string& text) {
        std::filesystem::create_directories(path.parent_path());
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp);
            out << text;
        }
        std::filesystem::rename(tmp, path);
    }

    CacheConfig cfg_;
    std::map<std::string, RingPtr> mem_;
};

}  // namespace grasschar
