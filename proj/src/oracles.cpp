#include "spectral/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <thread>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

// Fixed half-edge layout for a degree profile: vertex i owns the
// contiguous block [off[i], off[i]+mu[i]); sigma is the cyclic rotation
// inside each block.
struct HalfEdgeLayout {
    std::vector<int> owner;  // half-edge -> vertex
    std::vector<int> next;   // sigma
    int total = 0;

    explicit HalfEdgeLayout(const std::vector<long>& mu) {
        for (std::size_t i = 0; i < mu.size(); ++i) {
            int base = total;
            for (long k = 0; k < mu[i]; ++k) {
                owner.push_back(static_cast<int>(i));
                next.push_back(base + static_cast<int>((k + 1) % mu[i]));
            }
            total += static_cast<int>(mu[i]);
        }
    }
};

// Count matchings with the requested genus; `forced` optionally pins the
// partner of half-edge 0 (the work-splitting hook).
long count_matchings(const HalfEdgeLayout& L, const std::vector<long>& mu, int g, int forced) {
    const int M = L.total;
    std::vector<int> match(M, -1);
    long count = 0;

    std::function<void()> rec = [&]() {
        int h = 0;
        while (h < M && match[h] >= 0) ++h;
        if (h == M) {
            // connectivity over vertices
            DisjointSet ds(static_cast<int>(mu.size()));
            for (int e = 0; e < M; ++e)
                if (match[e] > e) ds.unite(L.owner[e], L.owner[match[e]]);
            if (ds.components() != 1) return;
            // faces: orbits of sigma o alpha
            std::vector<char> seen(M, 0);
            int faces = 0;
            for (int s = 0; s < M; ++s) {
                if (seen[s]) continue;
                ++faces;
                int cur = s;
                do {
                    seen[cur] = 1;
                    cur = L.next[match[cur]];
                } while (cur != s);
            }
            int V = static_cast<int>(mu.size());
            int E = M / 2;
            int twog = 2 - V + E - faces;
            if (twog == 2 * g) ++count;
            return;
        }
        for (int p = h + 1; p < M; ++p) {
            if (match[p] >= 0) continue;
            if (h == 0 && forced >= 0 && p != forced) continue;
            match[h] = p;
            match[p] = h;
            rec();
            match[h] = -1;
            match[p] = -1;
        }
    };
    rec();
    return count;
}

}  // namespace

Rational dessin_brute(int g, const std::vector<long>& mu, int jobs) {
    if (mu.empty()) throw UsageError("dessin_brute: empty profile");
    long total = 0;
    for (long p : mu) {
        if (p <= 0) throw UsageError("dessin_brute: parts must be positive");
        total += p;
    }
    if (total > 12) throw Unsupported("dessin_brute: weight budget is 12");
    if (g < 0 || (total & 1)) return Rational(0);

    HalfEdgeLayout L(mu);
    long count = 0;
    if (jobs <= 1 || L.total < 4) {
        count = count_matchings(L, mu, g, -1);
    } else {
        // Split on the partner of half-edge 0; commutative sum-reduction.
        std::vector<long> partial(L.total, 0);
        std::vector<std::thread> pool;
        std::atomic<int> next_branch{1};
        int threads = std::min<int>(jobs, L.total - 1);
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w]() {
                (void)w;
                for (int p = next_branch.fetch_add(1); p < L.total; p = next_branch.fetch_add(1))
                    partial[p] = count_matchings(L, mu, g, p);
            });
        }
        for (auto& th : pool) th.join();
        for (long c : partial) count += c;
    }

    mpz_class denom = 1;
    for (long p : mu) denom *= p;
    return Rational(mpz_class(count), denom);
}

namespace {

// One pass over all r-tuples of transpositions of S_d, pinning the first
// transposition when `forced` >= 0. Adds the number of tuples whose
// product has cycle type `target` (sorted descending) and whose
// transposition graph is connected together with the product's support.
long count_tuples(int d, int r, const std::vector<std::pair<int, int>>& trans,
                  const std::vector<long>& target, int forced) {
    std::vector<std::array<int, 5>> stack;  // product permutations by level
    std::array<int, 5> id{};
    for (int i = 0; i < d; ++i) id[i] = i;

    long count = 0;
    std::vector<int> choice(std::max(r, 1), -1);

    std::function<void(int, std::array<int, 5>)> rec = [&](int level, std::array<int, 5> prod) {
        if (level == r) {
            // cycle type of prod
            std::array<char, 5> seen{};
            std::vector<long> type;
            for (int i = 0; i < d; ++i) {
                if (seen[i]) continue;
                int len = 0, cur = i;
                while (!seen[cur]) {
                    seen[cur] = 1;
                    cur = prod[cur];
                    ++len;
                }
                type.push_back(len);
            }
            std::sort(type.begin(), type.end(), std::greater<>());
            if (type != target) return;
            // transitivity of the generated group = connectivity of the
            // union of the transposition edges (plus singletons for d=1).
            DisjointSet ds(d);
            for (int l = 0; l < r; ++l) {
                auto [a, b] = trans[choice[l]];
                ds.unite(a, b);
            }
            if (ds.components() != 1) return;
            ++count;
            return;
        }
        for (int t = 0; t < static_cast<int>(trans.size()); ++t) {
            if (level == 0 && forced >= 0 && t != forced) continue;
            choice[level] = t;
            std::array<int, 5> next = prod;
            std::swap(next[trans[t].first], next[trans[t].second]);
            rec(level + 1, next);
        }
    };

    if (r == 0) {
        std::array<char, 5> seen{};
        std::vector<long> type;
        for (int i = 0; i < d; ++i)
            if (!seen[i]) {
                seen[i] = 1;
                type.push_back(1);
            }
        std::sort(type.begin(), type.end(), std::greater<>());
        if (type == target && d == 1) return 1;
        return 0;
    }
    rec(0, id);
    return count;
}

}  // namespace

Rational hurwitz_brute(int g, const std::vector<long>& mu, int jobs) {
    if (mu.empty()) throw UsageError("hurwitz_brute: empty profile");
    long d = 0;
    for (long p : mu) {
        if (p <= 0) throw UsageError("hurwitz_brute: parts must be positive");
        d += p;
    }
    const int n = static_cast<int>(mu.size());
    const long r = 2L * g - 2 + n + d;
    if (d > 5) throw Unsupported("hurwitz_brute: degree budget is 5");
    if (r > 7) throw Unsupported("hurwitz_brute: ramification budget is 7");
    if (g < 0 || r < 0) return Rational(0);

    std::vector<std::pair<int, int>> trans;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) trans.emplace_back(a, b);

    std::vector<long> target(mu);
    std::sort(target.begin(), target.end(), std::greater<>());

    long count = 0;
    if (r == 0 || jobs <= 1 || trans.empty()) {
        count = count_tuples(static_cast<int>(d), static_cast<int>(r), trans, target, -1);
    } else {
        std::vector<long> partial(trans.size(), 0);
        std::vector<std::thread> pool;
        std::atomic<int> next_branch{0};
        int threads = std::min<int>(jobs, static_cast<int>(trans.size()));
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&]() {
                for (int t = next_branch.fetch_add(1); t < static_cast<int>(trans.size());
                     t = next_branch.fetch_add(1))
                    partial[t] =
                        count_tuples(static_cast<int>(d), static_cast<int>(r), trans, target, t);
            });
        }
        for (auto& th : pool) th.join();
        for (long c : partial) count += c;
    }

    Rational h = Rational(mpz_class(count), factorial(d));          // labeled-branch count / d!
    return Rational(aut_order(target)) * h / Rational(factorial(r));
}

}  // namespace spectral
