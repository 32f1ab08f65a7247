#pragma once

// Persistent normal-form cache. One JSON file per key under a cache
// directory; keys hash the canonical input together with the engine version
// and convention constants, so records from a different engine or convention
// set are never reused. Writes go through a temp file + rename, which keeps
// concurrent readers safe.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "h2skein/serialize.hpp"
#include "h2skein/version.hpp"

namespace h2skein {

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class NormalFormCache {
  public:
    explicit NormalFormCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    static std::string make_key(const std::string& canonical_input, const std::string& target) {
        return std::string(kEngineVersion) + "|" + conventions_string() + "|" + target + "|" +
               canonical_input;
    }

    std::optional<Json> get(const std::string& key) const {
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        Json j;
        try {
            in >> j;
        } catch (...) {
            return std::nullopt;
        }
        if (j.value("key", "") != key) return std::nullopt;
        if (j.value("engine_version", "") != kEngineVersion) return std::nullopt;
        if (j.value("conventions", "") != conventions_string()) return std::nullopt;
        return j.at("value");
    }

    void put(const std::string& key, const Json& value) const {
        Json j{{"key", key},
               {"engine_version", kEngineVersion},
               {"conventions", conventions_string()},
               {"value", value}};
        auto final_path = path_for(key);
        auto tmp = final_path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, final_path);
    }

  private:
    std::filesystem::path path_for(const std::string& key) const {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(key)));
        return dir_ / (std::string(buf) + ".json");
    }

    std::filesystem::path dir_;
};

}  // namespace h2skein
