#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "satake/serialize.hpp"

namespace satake {

/// Content-addressed JSON file store. Keys are hashes of the canonical
/// config string; writes go through a temporary file and an atomic
/// rename. A corrupt entry is ignored with a warning and recomputed by
/// the caller.
class ResultCache {
  public:
    explicit ResultCache(std::filesystem::path dir, bool enabled = true)
        : dir_(std::move(dir)), enabled_(enabled) {}

    bool enabled() const { return enabled_; }

    static std::string key_for(const std::string& canonical_config) {
        // FNV-1a, 64-bit.
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : canonical_config) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }

    std::optional<json> lookup(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        auto path = dir_ / (key + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            json j;
            in >> j;
            return j;
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring corrupt cache entry " << path.string() << ": "
                      << e.what() << "\n";
            return std::nullopt;
        }
    }

    void store(const std::string& key, const json& payload) const {
        if (!enabled_) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        auto path = dir_ / (key + ".json");
        auto tmp = dir_ / (key + ".json.tmp");
        {
            std::ofstream out(tmp);
            if (!out) {
                std::cerr << "warning: cache directory not writable: " << dir_.string() << "\n";
                return;
            }
            out << payload.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path, ec);
        if (ec) std::cerr << "warning: cache store failed: " << ec.message() << "\n";
    }

  private:
    std::filesystem::path dir_;
    bool enabled_;
};

} // namespace satake
