#include "spectral/keys.hpp"

#include <functional>

namespace spectral {

namespace {
void partitions_rec(long total, int n, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (n == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (long p = std::min<long>(total - (n - 1), max_part); p >= 1; --p) {
        if (p * n < total) break;
        cur.push_back(p);
        partitions_rec(total - p, n - 1, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

void partitions_into(long total, int n, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    partitions_rec(total, n, total, cur, out);
}

std::vector<std::vector<long>> all_partitions(long total) {
    std::vector<std::vector<long>> out;
    for (int n = 1; n <= total; ++n) partitions_into(total, n, out);
    return out;
}

void compositions_into(long total, int n, std::vector<std::vector<long>>& out) {
    std::vector<long> cur(n, 0);
    // Recursive enumeration without recursion: odometer over first n-1 slots.
    std::function<void(int, long)> rec = [&](int i, long rest) {
        if (i == n - 1) {
            cur[i] = rest;
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            cur[i] = v;
            rec(i + 1, rest - v);
        }
    };
    if (n <= 0) {
        if (total == 0) out.push_back({});
        return;
    }
    rec(0, total);
}

}  // namespace spectral
