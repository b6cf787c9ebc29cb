#pragma once

#include <string>

#include "spectral/dessins.hpp"
#include "spectral/hurwitz.hpp"
#include "spectral/keys.hpp"

namespace spectral {

// Versioned on-disk memo for the scalar tables. Entries are immutable:
// loading merges them into the engines, saving unions the engines' tables
// with whatever was already stored.
class CacheFile {
public:
    static constexpr int kVersion = 1;

    explicit CacheFile(std::string path) : path_(std::move(path)) {}

    // Returns false (and warns on stderr) on a version mismatch, in which
    // case the cache is treated as empty and will be rebuilt on save.
    bool load(DessinEngine& dessins, HurwitzEngine& hurwitz);
    void save(const DessinEngine& dessins, const HurwitzEngine& hurwitz);

    struct Info {
        bool exists = false;
        int version = 0;
        std::size_t entries = 0;
    };
    Info info() const;
    void clear() const;

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

std::string count_key_string(const CountKey& k);
CountKey count_key_parse(const std::string& s);

}  // namespace spectral
