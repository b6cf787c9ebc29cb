#include "spectral/hurwitz.hpp"

#include <algorithm>

#include "spectral/newton.hpp"

namespace spectral {

namespace {
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

// mu^{mu} / mu! as an exact rational.
Rational mu_weight(long mu) { return Rational(int_pow(mpz_class(mu), mu), factorial(mu)); }
}  // namespace

Rational HurwitzEngine::h_unstable(const std::vector<long>& mu) {
    if (mu.size() == 1) {
        long d = mu[0];
        return Rational(int_pow(mpz_class(d), d - 2 + 2), factorial(d)) / Rational(d * d);
        // d^{d-2}/d! written via d^d/(d! d^2) to keep int_pow's exponent >= 0
    }
    if (mu.size() == 2) {
        return mu_weight(mu[0]) * mu_weight(mu[1]) / Rational(mu[0] + mu[1]);
    }
    throw UsageError("h_unstable: profile length must be 1 or 2");
}

long HurwitzEngine::ram_count(int g, const std::vector<long>& mu) {
    long d = 0;
    for (long p : mu) d += p;
    return 2L * g - 2 + static_cast<long>(mu.size()) + d;
}

Rational HurwitzEngine::cut_and_join(int g, const std::vector<long>& mu) {
    if (g < 0 || mu.empty()) return Rational(0);
    for (long p : mu)
        if (p <= 0) return Rational(0);
    const int n = static_cast<int>(mu.size());
    if (g == 0 && n <= 2) return h_unstable(mu);

    CountKey key(g, mu);
    Rational cached;
    if (memo_.lookup(key, cached)) return cached;

    const long r = ram_count(g, key.parts);
    if (r <= 0) throw Error("cut_and_join: underdetermined key (r = 0 off the base cases)");

    Rational rhs(0);
    const auto& p = key.parts;

    // Join: merge parts i and j.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<long> merged;
            merged.reserve(n - 1);
            merged.push_back(p[i] + p[j]);
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) merged.push_back(p[k]);
            rhs += Rational(p[i] + p[j]) * cut_and_join(g, merged);
        }
    }

    // Cut: split part i into alpha + beta.
    for (int i = 0; i < n; ++i) {
        std::vector<long> rest;
        rest.reserve(n - 1);
        for (int k = 0; k < n; ++k)
            if (k != i) rest.push_back(p[k]);
        const int m = n - 1;
        for (long alpha = 1; alpha <= p[i] - 1; ++alpha) {
            long beta = p[i] - alpha;
            Rational w = Rational(alpha * beta) * Rational(1, 2);

            std::vector<long> cut = rest;
            cut.push_back(alpha);
            cut.push_back(beta);
            Rational inner = cut_and_join(g - 1, cut);

            for (int g1 = 0; g1 <= g; ++g1) {
                int g2 = g - g1;
                for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                    std::vector<long> nu1{alpha}, nu2{beta};
                    for (int k = 0; k < m; ++k)
                        (mask & (1u << k) ? nu1 : nu2).push_back(rest[k]);
                    inner += cut_and_join(g1, nu1) * cut_and_join(g2, nu2);
                }
            }
            rhs += w * inner;
        }
    }

    Rational value = rhs / Rational(r);
    memo_.store(key, value);
    return value;
}

MultiLaurent HurwitzEngine::xihat(int k) {
    {
        std::lock_guard<std::mutex> lock(xihat_mu_);
        auto it = xihat_cache_.find(k);
        if (it != xihat_cache_.end()) return it->second;
    }
    MultiLaurent result(1);
    const MultiLaurent one = MultiLaurent::constant(1, Rational(1));
    const MultiLaurent t = MultiLaurent::var(1, 0);
    if (k == -2) {
        result = (one - MultiLaurent::var(1, 0, -2)).scale(Rational(1, 2));
    } else if (k == -1) {
        result = one - MultiLaurent::var(1, 0, -1);
    } else if (k == 0) {
        result = t - one;
    } else if (k > 0) {
        result = MultiLaurent::var(1, 0, 2) * (t - one) * xihat(k - 1).derivative(0);
    } else {
        throw UsageError("xihat: index below -2");
    }
    std::lock_guard<std::mutex> lock(xihat_mu_);
    xihat_cache_.emplace(k, result);
    return result;
}

namespace {

// Dense exact linear solve (small systems only).
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) throw Error("solve_dense: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rational inv = a[col][col].invert();
        for (int j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

std::map<std::vector<long>, Rational> HurwitzEngine::elsv_fit(int g, int n) {
    if (!stable(g, n)) throw UsageError("elsv_fit: unstable (g,n)");
    const long kappa = 3L * g - 3 + n;  // total-degree bound
    const int K = static_cast<int>(kappa) + 1;

    // Inverse Vandermonde on nodes 1..K (powers 0..K-1).
    std::vector<std::vector<Rational>> vand(K, std::vector<Rational>(K));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) vand[i][j] = Rational(i + 1).pow(j);
    std::vector<std::vector<Rational>> vinv(K, std::vector<Rational>(K));
    for (int col = 0; col < K; ++col) {
        std::vector<Rational> e(K, Rational(0));
        e[col] = Rational(1);
        std::vector<Rational> x = solve_dense(vand, e);
        for (int row = 0; row < K; ++row) vinv[row][col] = x[row];
    }

    // Tensor grid values P(mu) = H_g(mu) prod mu_i!/mu_i^{mu_i}.
    long cells = 1;
    for (int i = 0; i < n; ++i) cells *= K;
    std::vector<Rational> data(cells);
    std::vector<long> mu(n);
    for (long idx = 0; idx < cells; ++idx) {
        long rem = idx;
        for (int i = 0; i < n; ++i) {
            mu[i] = rem % K + 1;
            rem /= K;
        }
        Rational v = cut_and_join(g, mu);
        for (int i = 0; i < n; ++i) v /= mu_weight(mu[i]);
        data[idx] = v;
    }

    // Interpolate axis by axis: values -> polynomial coefficients.
    long stride = 1;
    for (int axis = 0; axis < n; ++axis) {
        std::vector<Rational> slice(K), coefs(K);
        for (long base = 0; base < cells; ++base) {
            if ((base / stride) % K != 0) continue;
            for (int i = 0; i < K; ++i) slice[i] = data[base + stride * i];
            for (int row = 0; row < K; ++row) {
                Rational acc(0);
                for (int col = 0; col < K; ++col) acc += vinv[row][col] * slice[col];
                coefs[row] = acc;
            }
            for (int i = 0; i < K; ++i) data[base + stride * i] = coefs[i];
        }
        stride *= K;
    }

    // Degree bound: coefficients above total degree kappa must vanish.
    std::map<std::vector<long>, Rational> table;
    std::vector<long> k(n);
    for (long idx = 0; idx < cells; ++idx) {
        long rem = idx, totdeg = 0;
        for (int i = 0; i < n; ++i) {
            k[i] = rem % K;
            rem /= K;
            totdeg += k[i];
        }
        if (data[idx].is_zero()) continue;
        if (totdeg > kappa)
            throw PolynomialityViolation("elsv_fit: coefficient above the ELSV degree bound");
        std::vector<long> sorted_k = k;
        std::sort(sorted_k.begin(), sorted_k.end(), std::greater<>());
        auto it = table.find(sorted_k);
        if (it == table.end())
            table.emplace(sorted_k, data[idx]);
        else if (it->second != data[idx])
            throw PolynomialityViolation("elsv_fit: fitted coefficients are not symmetric");
    }

    // Extra consistency row beyond the grid.
    std::fill(mu.begin(), mu.end(), static_cast<long>(K + 1));
    Rational lhs = cut_and_join(g, mu);
    for (int i = 0; i < n; ++i) lhs /= mu_weight(K + 1);
    Rational rhs(0);
    for (long idx = 0; idx < cells; ++idx) {
        if (data[idx].is_zero()) continue;
        long rem = idx;
        Rational term = data[idx];
        for (int i = 0; i < n; ++i) {
            term *= Rational(K + 1).pow(rem % K);
            rem /= K;
        }
        rhs += term;
    }
    if (lhs != rhs)
        throw PolynomialityViolation("elsv_fit: consistency row disagrees with the fit");

    return table;
}

MultiLaurent HurwitzEngine::f_hurwitz(int g, int n) {
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (f_memo_.lookup(key, cached)) return cached;

    auto table = elsv_fit(g, n);
    MultiLaurent F(n);
    // Sum over all exponent vectors: expand each sorted key over its
    // distinct permutations.
    for (const auto& [sorted_k, c] : table) {
        std::vector<long> perm = sorted_k;
        std::sort(perm.begin(), perm.end());
        do {
            MultiLaurent term = MultiLaurent::constant(n, c);
            for (int i = 0; i < n; ++i)
                term = term * xihat(static_cast<int>(perm[i])).embed(n, {i});
            F += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    f_memo_.store(key, F);
    return F;
}

LaurentSeries HurwitzEngine::deck_s(int order) {
    if (order < 2) throw UsageError("deck_s: order must be >= 2");
    return deck_series(order);
}

// Residue form at t = infinity. All bracket terms carry exactly one
// factor s'(t); the kernel is (1/2)(1/(t-t1) - 1/(s-t1)) t^3 (t-1) s/(s-t).
// The negatively oriented contour turns the t^{-1} coefficient into the
// value with an overall minus sign.
MultiLaurent HurwitzEngine::eo_hurwitz_at_order(int g, int n, int order) {
    const MultiLaurent zero(n);
    const auto pt = ExpansionPoint::Infinity;

    LaurentSeries s_q = deck_series(order);
    PolySeries S = lift_series(s_q, n);
    PolySeries Sp = S.derivative_t();
    PolySeries T = identity_series(n, pt, order);

    auto const_series = [&](const MultiLaurent& m) {
        PolySeries r(pt, order, zero);
        r.set_coeff(0, m);
        return r;
    };
    const PolySeries one = const_series(MultiLaurent::constant(n, Rational(1)));

    // Kernel.
    PolySeries C1 = (T - const_series(MultiLaurent::var(n, 0))).reciprocal();
    PolySeries C2 = (S - const_series(MultiLaurent::var(n, 0))).reciprocal();
    PolySeries kernel = (C1 - C2).scale(MultiLaurent::constant(n, Rational(1, 2))) * T * T * T *
                        (T - one) * S * (S - T).reciprocal();

    // Bracket, divided by the common factor s'(t) which we multiply last.
    PolySeries bracket(pt, order, zero);
    if (g == 1 && n == 1) {
        PolySeries d = (T - S).reciprocal();
        bracket = d * d;
    } else {
        if (g >= 1 && stable(g - 1, n + 1)) {
            MultiLaurent prev = eo_hurwitz(g - 1, n + 1);
            std::vector<VarAssign> assign(n + 1);
            assign[0] = {&T, -1};
            assign[1] = {&S, -1};
            for (int i = 2; i <= n; ++i) assign[i] = {nullptr, i - 1};
            bracket = bracket + substitute_vars(prev, assign, n, pt, order);
        }
        const int m = n - 1;
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                int szI = __builtin_popcount(mask);
                int szJ = m - szI;
                bool okI = stable(g1, szI + 1) || (g1 == 0 && szI == 1);
                bool okJ = stable(g2, szJ + 1) || (g2 == 0 && szJ == 1);
                if (!okI || !okJ) continue;

                auto factor = [&](int gg, uint32_t mm, const PolySeries& first) -> PolySeries {
                    int sz = __builtin_popcount(mm);
                    if (gg == 0 && sz == 1) {
                        // W_{0,2}(first, t_j): the dx part has no residue
                        // at infinity and is dropped.
                        int j = 0;
                        for (int i = 0; i < m; ++i)
                            if (mm & (1u << i)) j = i + 1;
                        PolySeries d =
                            (first - const_series(MultiLaurent::var(n, j))).reciprocal();
                        return d * d;
                    }
                    MultiLaurent w = eo_hurwitz(gg, sz + 1);
                    std::vector<VarAssign> assign(sz + 1);
                    assign[0] = {&first, -1};
                    int slot = 1;
                    for (int i = 0; i < m; ++i)
                        if (mm & (1u << i)) assign[slot++] = {nullptr, i + 1};
                    return substitute_vars(w, assign, n, pt, order);
                };

                bracket = bracket + factor(g1, mask, T) * factor(g2, ~mask & ((1u << m) - 1), S);
            }
        }
    }

    PolySeries integrand = kernel * bracket * Sp;
    return -integrand.residue();
}

MultiLaurent HurwitzEngine::eo_hurwitz(int g, int n) {
    if (!stable(g, n)) throw UsageError("eo_hurwitz: unstable (g,n)");
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (w_memo_.lookup(key, cached)) return cached;

    int order = 4 * (3 * g - 3 + n) + 2 * n + 12;
    MultiLaurent w = eo_hurwitz_at_order(g, n, order);
    for (int tries = 0;; ++tries) {
        MultiLaurent check = eo_hurwitz_at_order(g, n, order + 4);
        if (check == w) break;
        if (tries >= 4) throw TruncationError("eo_hurwitz: truncation did not stabilize");
        order *= 2;
        w = eo_hurwitz_at_order(g, n, order);
    }

    w_memo_.store(key, w);
    return w;
}

}  // namespace spectral
