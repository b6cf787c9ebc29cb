#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "spectral/rational.hpp"

namespace spectral {

// Memo key (g, sorted parts). Used for D, N, H, GW and tau tables.
struct CountKey {
    int g = 0;
    std::vector<long> parts;  // sorted descending

    CountKey() = default;
    CountKey(int g_, std::vector<long> p) : g(g_), parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }

    int n() const { return static_cast<int>(parts.size()); }
    long total() const {
        long s = 0;
        for (long p : parts) s += p;
        return s;
    }

    friend bool operator<(const CountKey& a, const CountKey& b) {
        if (a.g != b.g) return a.g < b.g;
        return a.parts < b.parts;
    }
    friend bool operator==(const CountKey& a, const CountKey& b) {
        return a.g == b.g && a.parts == b.parts;
    }
};

// |Aut(mu)|: product of factorials of part multiplicities.
inline mpz_class aut_order(const std::vector<long>& parts) {
    std::map<long, long> mult;
    for (long p : parts) ++mult[p];
    mpz_class a = 1;
    for (const auto& [p, m] : mult) a *= factorial(m);
    return a;
}

// All subsets of {0,..,n-1} as bitmasks, in increasing mask order.
inline std::vector<uint32_t> all_subsets(int n) {
    std::vector<uint32_t> masks;
    masks.reserve(1u << n);
    for (uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
    return masks;
}

// Partitions of `total` into exactly `n` positive parts, descending.
void partitions_into(long total, int n, std::vector<std::vector<long>>& out);
// All partitions of `total` (any length >= 1).
std::vector<std::vector<long>> all_partitions(long total);
// Compositions of `total` into exactly `n` non-negative parts.
void compositions_into(long total, int n, std::vector<std::vector<long>>& out);

// Memoization table guarded for idempotent concurrent writes.
template <class K, class V>
class MemoTable {
public:
    bool lookup(const K& k, V& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const K& k, const V& v) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(k, v);  // idempotent: same key always carries same value
    }
    std::map<K, V> snapshot() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_;
    }
    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

private:
    mutable std::mutex mu_;
    std::map<K, V> map_;
};

}  // namespace spectral
