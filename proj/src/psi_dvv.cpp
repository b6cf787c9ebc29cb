#include "spectral/psi_dvv.hpp"

namespace spectral {

namespace {

bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

bool on_shell(int g, const std::vector<long>& d) {
    long s = 0;
    for (long x : d) {
        if (x < 0) return false;
        s += x;
    }
    return s == 3L * g - 3 + static_cast<long>(d.size());
}

Rational dfact_product(const std::vector<long>& d) {
    Rational prod(1);
    for (long x : d) prod *= Rational(double_factorial(2 * x + 1));
    return prod;
}

}  // namespace

Rational PsiEngine::tau(int g, std::vector<long> d) {
    if (g < 0 || d.empty() || !stable(g, static_cast<int>(d.size()))) return Rational(0);
    if (!on_shell(g, d)) return Rational(0);
    Rational s = sigma(g, d);
    return s / dfact_product(d);
}

Rational PsiEngine::sigma(int g, std::vector<long> d) {
    if (g < 0 || d.empty() || !stable(g, static_cast<int>(d.size()))) return Rational(0);
    for (long x : d)
        if (x < 0) return Rational(0);
    if (!on_shell(g, d)) return Rational(0);
    return sigma_sorted(CountKey(g, std::move(d)));
}

// DVV recursion on the largest index. Seeds <sigma_0^3>_{0,3} = 1 and
// <sigma_1>_{1,1} = 1/8; every other on-shell stable key has largest
// index k >= 1 and all terms on the right drop 2g-2+n by one.
Rational PsiEngine::sigma_sorted(const CountKey& key) {
    Rational cached;
    if (sigma_memo_.lookup(key, cached)) return cached;

    const int g = key.g;
    const int n = key.n();
    Rational result(0);
    if (g == 0 && n == 3) {
        result = Rational(1);  // <tau_0^3> = 1
    } else if (g == 1 && n == 1) {
        result = Rational(1, 8);  // <tau_1> (2*1+1)!! = 3/24
    } else {
        const long k = key.parts[0];
        const std::vector<long> rest(key.parts.begin() + 1, key.parts.end());

        // Handle splitting off a (g-1, n+1) piece.
        for (long a = 0; a <= k - 2; ++a) {
            long b = k - 2 - a;
            std::vector<long> d = rest;
            d.push_back(a);
            d.push_back(b);
            result += sigma(g - 1, std::move(d)) * Rational(1, 2);
        }

        // Stable factorizations over ordered (g1, I), (g2, J).
        const int m = n - 1;
        for (long a = 0; a <= k - 2; ++a) {
            long b = k - 2 - a;
            for (int g1 = 0; g1 <= g; ++g1) {
                int g2 = g - g1;
                for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                    std::vector<long> dI{a}, dJ{b};
                    for (int i = 0; i < m; ++i)
                        (mask & (1u << i) ? dI : dJ).push_back(rest[i]);
                    if (!stable(g1, static_cast<int>(dI.size())) ||
                        !stable(g2, static_cast<int>(dJ.size())))
                        continue;
                    result += sigma(g1, std::move(dI)) * sigma(g2, std::move(dJ)) * Rational(1, 2);
                }
            }
        }

        // Dilaton-type line: absorb one of the other insertions.
        for (int j = 0; j < m; ++j) {
            std::vector<long> d;
            d.reserve(m);
            d.push_back(k + rest[j] - 1);
            for (int i = 0; i < m; ++i)
                if (i != j) d.push_back(rest[i]);
            result += sigma(g, std::move(d)) * Rational(2 * rest[j] + 1);
        }
    }

    sigma_memo_.store(key, result);
    return result;
}

MultiLaurent PsiEngine::wgnK_from_tau(int g, int n) {
    MultiLaurent w(n);
    long shell = 3L * g - 3 + n;
    if (shell < 0) return w;
    std::vector<std::vector<long>> comps;
    compositions_into(shell, n, comps);
    for (const auto& d : comps) {
        Rational c = sigma(g, d);
        if (c.is_zero()) continue;
        Exp e(n);
        for (int i = 0; i < n; ++i) e[i] = static_cast<int>(2 * d[i]);
        w.add_term(e, c);
    }
    return w;
}

// Residue-evaluated recursion for w^K: the quadratic terms carry t1^4/2,
// and each j-line is the derivative of a divided difference whose poles at
// t_j = +-t_1 cancel exactly.
MultiLaurent PsiEngine::wgnK(int g, int n) {
    if (!stable(g, n)) throw UsageError("wgnK: unstable (g,n)");
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (w_memo_.lookup(key, cached)) return cached;

    MultiLaurent w(n);
    if (g == 0 && n == 3) {
        w = MultiLaurent::constant(3, Rational(1));
    } else if (g == 1 && n == 1) {
        w = MultiLaurent::var(1, 0, 2).scale(Rational(1, 8));
    } else {
        const MultiLaurent t1_4 = MultiLaurent::var(n, 0, 4);

        if (g >= 1 && stable(g - 1, n + 1)) {
            // w_{g-1,n+1}(t1, t1, t2..tn)
            std::vector<int> vm(n + 1);
            vm[0] = 0;
            vm[1] = 0;
            for (int i = 2; i <= n; ++i) vm[i] = i - 1;
            MultiLaurent piece = wgnK(g - 1, n + 1).embed(n, vm);
            w += (t1_4 * piece).scale(Rational(1, 2));
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
                MultiLaurent a = wgnK(g1, szI + 1).embed(n, vmI);
                MultiLaurent b = wgnK(g2, szJ + 1).embed(n, vmJ);
                w += (t1_4 * a * b).scale(Rational(1, 2));
            }
        }

        // sum_j d/dt_j [ t_j (t1^4 P(t1) - t_j^4 P(t_j)) / (t1^2 - t_j^2) ]
        MultiLaurent prev = (n >= 2) ? wgnK(g, n - 1) : MultiLaurent(0);
        for (int j = 1; j < n; ++j) {
            std::vector<int> keep_t1, keep_tj;
            keep_t1.push_back(0);
            keep_tj.push_back(j);
            for (int i = 1; i < n; ++i)
                if (i != j) {
                    keep_t1.push_back(i);
                    keep_tj.push_back(i);
                }
            MultiLaurent P1 = prev.embed(n, keep_t1);   // first slot = t1
            MultiLaurent Pj = prev.embed(n, keep_tj);   // first slot = tj
            MultiLaurent num = MultiLaurent::var(n, j, 1) *
                               (t1_4 * P1 - MultiLaurent::var(n, j, 4) * Pj);
            MultiLaurent den = MultiLaurent::var(n, 0, 2) - MultiLaurent::var(n, j, 2);
            w += divide_exact(num, den).derivative(j);
        }
    }

    w_memo_.store(key, w);
    return w;
}

bool PsiEngine::equivalence_check(int g, int n) {
    return wgnK(g, n) == wgnK_from_tau(g, n);
}

}  // namespace spectral
