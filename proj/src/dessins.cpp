#include "spectral/dessins.hpp"

namespace spectral {

namespace {
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }
}  // namespace

Rational DessinEngine::d01(long mu) {
    if (mu <= 0 || (mu & 1)) return Rational(0);
    long m = mu / 2;
    return catalan(m) / Rational(mu);
}

Rational DessinEngine::d02(long mu1, long mu2) {
    if (mu1 <= 0 || mu2 <= 0) return Rational(0);
    if (((mu1 ^ mu2) & 1) != 0) return Rational(0);  // mixed parity
    if ((mu1 & 1) == 0) {
        long j = mu1 / 2, k = mu2 / 2;
        return Rational(binomial(2 * j, j) * binomial(2 * k, k), mpz_class(4 * (j + k)));
    }
    long j = (mu1 - 1) / 2, k = (mu2 - 1) / 2;
    return Rational(binomial(2 * j, j) * binomial(2 * k, k), mpz_class(j + k + 1));
}

Rational DessinEngine::dgn(int g, const std::vector<long>& mu) {
    if (g < 0 || mu.empty()) return Rational(0);
    for (long p : mu)
        if (p <= 0) return Rational(0);
    const int n = static_cast<int>(mu.size());
    if (g == 0 && n == 1) return d01(mu[0]);
    if (g == 0 && n == 2) return d02(mu[0], mu[1]);
    if (!stable(g, n)) return Rational(0);
    return dgn_sorted(CountKey(g, mu));
}

// The edge-removal equation, made effective by strong induction on the
// total weight |mu|: every term on the right has weight |mu| - 2. The
// split sum runs over alpha, beta >= 1; the alpha = 0 / beta = 0 boundary,
// where one factor degenerates to the single-vertex count with the
// regularized value [nu D_{0,1}(nu)]|_{nu=0} = C_0 = 1, survives as the
// companion term 2 (mu1 - 2) D_{g,n}(mu1 - 2, mu_rest).
Rational DessinEngine::dgn_sorted(const CountKey& key) {
    Rational cached;
    if (memo_.lookup(key, cached)) return cached;
    Rational value = recursion_rhs(key.g, key.parts) / Rational(key.parts[0]);
    memo_.store(key, value);
    return value;
}

Rational DessinEngine::recursion_rhs(int g, const std::vector<long>& mu) {
    const int n = static_cast<int>(mu.size());
    const long mu1 = mu[0];
    const std::vector<long> rest(mu.begin() + 1, mu.end());
    Rational rhs(0);

    // Shrink the edge joining vertex 1 to vertex j.
    for (int j = 0; j < n - 1; ++j) {
        long nu = mu1 + rest[j] - 2;
        if (nu == 0) {
            // Regularized corner: only the two-vertex target sees it.
            if (g == 0 && n == 2) rhs += Rational(1);
            continue;
        }
        std::vector<long> next;
        next.reserve(n - 1);
        next.push_back(nu);
        for (int i = 0; i < n - 1; ++i)
            if (i != j) next.push_back(rest[i]);
        rhs += Rational(nu) * dgn(g, next);
    }

    // Remove a loop at vertex 1 (handle or splitting).
    for (long alpha = 1; alpha <= mu1 - 3; ++alpha) {
        long beta = mu1 - 2 - alpha;
        Rational w(alpha * beta);

        std::vector<long> cut;
        cut.reserve(n + 1);
        cut.push_back(alpha);
        cut.push_back(beta);
        cut.insert(cut.end(), rest.begin(), rest.end());
        Rational inner = dgn(g - 1, cut);

        const int m = n - 1;
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<long> muI{alpha}, muJ{beta};
                for (int i = 0; i < m; ++i)
                    (mask & (1u << i) ? muI : muJ).push_back(rest[i]);
                inner += dgn(g1, muI) * dgn(g2, muJ);
            }
        }
        rhs += w * inner;
    }

    // Boundary of the split sum: the degenerate single-vertex factor.
    if (mu1 >= 3) {
        std::vector<long> comp;
        comp.reserve(n);
        comp.push_back(mu1 - 2);
        comp.insert(comp.end(), rest.begin(), rest.end());
        rhs += Rational(2 * (mu1 - 2)) * dgn(g, comp);
    }
    return rhs;
}

Rational DessinEngine::recursion_defect(int g, const std::vector<long>& mu) {
    CountKey key(g, mu);
    return Rational(key.parts[0]) * dgn(g, mu) - recursion_rhs(g, key.parts);
}

MultiLaurent DessinEngine::w02D() {
    // 1/(t1+t2)^2 is not itself a Laurent polynomial; callers expand it as
    // a series. We expose the denominator data via (t1+t2)^2 instead.
    MultiLaurent s = MultiLaurent::var(2, 0) + MultiLaurent::var(2, 1);
    return s * s;
}

// Differential recursion for the coefficient polynomials: for each j the
// divided difference
//   [ t_j A Q_j - ((t_j^2-1)^3/t_j) P_j ] / (t_j^2 - t_1^2),  A = (t1^2-1)^3/t1^2
// is a Laurent polynomial (poles at t_j = +-t_1 cancel), and
//   w_{g,n} = sum_j (1/16) d/dt_j [ ... ]
//           - (t1^2-1)^3/(32 t1^2) [ w_{g-1,n+1}(t1,t1,..) + stable splits ].
MultiLaurent DessinEngine::wgnD(int g, int n) {
    if (!stable(g, n)) throw UsageError("wgnD: unstable (g,n)");
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (w_memo_.lookup(key, cached)) return cached;

    MultiLaurent w(n);
    if (g == 1 && n == 1) {
        // -(1/128) (t^2-1)^3 / t^4
        MultiLaurent t2m1 = MultiLaurent::var(1, 0, 2) - MultiLaurent::constant(1, Rational(1));
        w = t2m1.pow(3).shift({-4}).scale(Rational(-1, 128));
    } else if (g == 0 && n == 3) {
        // -(1/16) (1 - 1/(t1^2 t2^2 t3^2))
        MultiLaurent one = MultiLaurent::constant(3, Rational(1));
        w = (one - MultiLaurent::monomial(3, {-2, -2, -2}, Rational(1))).scale(Rational(-1, 16));
    } else {
        const MultiLaurent one = MultiLaurent::constant(n, Rational(1));
        const MultiLaurent A =
            (MultiLaurent::var(n, 0, 2) - one).pow(3).shift([&] {
                Exp e(n, 0);
                e[0] = -2;
                return e;
            }());

        MultiLaurent prev = (n >= 2) ? wgnD(g, n - 1) : MultiLaurent(0);
        for (int j = 1; j < n; ++j) {
            std::vector<int> keep_t1, keep_tj;
            keep_t1.push_back(0);
            keep_tj.push_back(j);
            for (int i = 1; i < n; ++i)
                if (i != j) {
                    keep_t1.push_back(i);
                    keep_tj.push_back(i);
                }
            MultiLaurent Q = prev.embed(n, keep_t1);
            MultiLaurent P = prev.embed(n, keep_tj);
            MultiLaurent Bj = (MultiLaurent::var(n, j, 2) - one).pow(3).shift([&] {
                Exp e(n, 0);
                e[j] = -1;
                return e;
            }());
            MultiLaurent num = MultiLaurent::var(n, j, 1) * A * Q - Bj * P;
            MultiLaurent den = MultiLaurent::var(n, j, 2) - MultiLaurent::var(n, 0, 2);
            w += divide_exact(num, den).derivative(j).scale(Rational(1, 16));
        }

        MultiLaurent bracket(n);
        if (g >= 1 && stable(g - 1, n + 1)) {
            std::vector<int> vm(n + 1);
            vm[0] = 0;
            vm[1] = 0;
            for (int i = 2; i <= n; ++i) vm[i] = i - 1;
            bracket += wgnD(g - 1, n + 1).embed(n, vm);
        }
        const int m = n - 1;
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                int szI = __builtin_popcount(mask);
                int szJ = m - szI;
                if (!stable(g1, szI + 1) || !stable(g2, szJ + 1)) continue;
                std::vector<int> vmI{0}, vmJ{0};
                for (int i = 0; i < m; ++i)
                    (mask & (1u << i) ? vmI : vmJ).push_back(i + 1);
                bracket += wgnD(g1, szI + 1).embed(n, vmI) * wgnD(g2, szJ + 1).embed(n, vmJ);
            }
        }
        w -= (A * bracket).scale(Rational(1, 32));
    }

    w_memo_.store(key, w);
    return w;
}

LaurentSeries t_in_x_series(int order) {
    LaurentSeries t(ExpansionPoint::Infinity, order, Rational(0));
    t.set_coeff(0, Rational(-1));
    for (long m = 0; m + 1 <= order; ++m)
        t.set_coeff(static_cast<int>(m + 1), Rational(-2) * Rational(binomial(m, m / 2)));
    return t;
}

LaplaceReport DessinEngine::laplace_check(int g, int n, long max_weight) {
    LaplaceReport report;
    if (max_weight < n) return report;  // vacuous: every part is >= 1
    MultiLaurent w = wgnD(g, n);

    const int order = static_cast<int>(max_weight) + 2;
    LaurentSeries t = t_in_x_series(order);
    LaurentSeries dt = t.derivative_u();  // dt/du with u = 1/x

    // In u-coordinates the weighted counts sit at plain exponents:
    // W = sum_mu D(mu) prod mu_i u_i^{mu_i - 1} du_i, so the coefficient
    // of prod u_i^{mu_i - 1} in w(t(u)) prod (dt/du) is prod mu_i D(mu).
    std::map<int, LaurentSeries> powers;
    auto power_series = [&](int e) -> const LaurentSeries& {
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, t.power(e) * dt).first;
        return it->second;
    };

    std::vector<std::vector<long>> parts;
    for (long wgt = n; wgt <= max_weight; ++wgt) partitions_into(wgt, n, parts);
    for (const auto& mu : parts) {
        // Sum over distinct permutations is unnecessary: both sides are
        // symmetric, so check the sorted representative only.
        Rational got(0);
        for (const auto& [e, c] : w.terms()) {
            Rational prod = c;
            for (int i = 0; i < n && !prod.is_zero(); ++i)
                prod *= power_series(e[i]).coeff(static_cast<int>(mu[i]) - 1);
            got += prod;
        }
        Rational expected = dgn(g, mu);
        for (long p : mu) expected *= Rational(p);
        if (got != expected) {
            report.pass = false;
            report.first_failure = LaplaceMismatch{g, mu, expected, got};
            return report;
        }
    }
    return report;
}

}  // namespace spectral
