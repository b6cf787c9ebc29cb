#include "spectral/lattice.hpp"

#include <functional>

#include "spectral/series.hpp"

namespace spectral {

namespace {
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

// (s^2-1)^k / s^m in variable v of arity n.
MultiLaurent pole_factor(int n, int v, int k, int m) {
    MultiLaurent p =
        (MultiLaurent::var(n, v, 2) - MultiLaurent::constant(n, Rational(1))).pow(k);
    Exp e(n, 0);
    e[v] = -m;
    return p.shift(e);
}
}  // namespace

MultiLaurent LatticeEngine::fgnL(int g, int n) {
    if (!stable(g, n)) throw UsageError("fgnL: unstable (g,n)");
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (f_memo_.lookup(key, cached)) return cached;

    MultiLaurent F(n);
    if (g == 1 && n == 1) {
        // -(1/384) (t+1)^4 (t - 4 + 1/t) / t^2
        MultiLaurent tp1 = MultiLaurent::var(1, 0) + MultiLaurent::constant(1, Rational(1));
        MultiLaurent tail = MultiLaurent::var(1, 0) - MultiLaurent::constant(1, Rational(4)) +
                            MultiLaurent::var(1, 0, -1);
        F = (tp1.pow(4).shift({-2}) * tail).scale(Rational(-1, 384));
    } else if (g == 0 && n == 3) {
        // -(1/16) (t1+1)(t2+1)(t3+1)(1 + 1/(t1 t2 t3))
        MultiLaurent prod = MultiLaurent::constant(3, Rational(1));
        for (int i = 0; i < 3; ++i)
            prod = prod * (MultiLaurent::var(3, i) + MultiLaurent::constant(3, Rational(1)));
        MultiLaurent tail = MultiLaurent::constant(3, Rational(1)) +
                            MultiLaurent::monomial(3, {-1, -1, -1}, Rational(1));
        F = (prod * tail).scale(Rational(-1, 16));
    } else {
        // Integrand in t = variable 0; integrate from -1 at the end.
        MultiLaurent integrand(n);

        if (n >= 2) {
            MultiLaurent prev = fgnL(g, n - 1);
            for (int j = 1; j < n; ++j) {
                std::vector<int> keep_t, keep_tj;
                keep_t.push_back(0);
                keep_tj.push_back(j);
                for (int i = 1; i < n; ++i)
                    if (i != j) {
                        keep_t.push_back(i);
                        keep_tj.push_back(i);
                    }
                // A(s) = (s^2-1)^3/s^2 * dF/ds with s the first slot.
                MultiLaurent At = pole_factor(n, 0, 3, 2) * prev.embed(n, keep_t).derivative(0);
                MultiLaurent Aj = pole_factor(n, j, 3, 2) * prev.embed(n, keep_tj).derivative(j);
                MultiLaurent num = MultiLaurent::var(n, j, 1) * (At - Aj);
                MultiLaurent den = MultiLaurent::var(n, 0, 2) - MultiLaurent::var(n, j, 2);
                integrand += divide_exact(num, den);

                // (t^2-1)^2/t^2 dF/dt(t, rest without j)
                integrand += pole_factor(n, 0, 2, 2) * prev.embed(n, keep_t).derivative(0);
            }
        }

        MultiLaurent quad(n);
        if (g >= 1 && stable(g - 1, n + 1)) {
            MultiLaurent inner = fgnL(g - 1, n + 1).derivative(0).derivative(1);
            std::vector<int> vm(n + 1);
            vm[0] = 0;
            vm[1] = 0;
            for (int i = 2; i <= n; ++i) vm[i] = i - 1;
            quad += inner.embed(n, vm);
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
                quad += fgnL(g1, szI + 1).derivative(0).embed(n, vmI) *
                        fgnL(g2, szJ + 1).derivative(0).embed(n, vmJ);
            }
        }
        integrand += (pole_factor(n, 0, 3, 2) * quad).scale(Rational(1, 2));

        F = integrand.scale(Rational(-1, 16)).antiderivative_from(0, Rational(-1));
    }

    f_memo_.store(key, F);
    return F;
}

// F^L expanded in u_i = 1/z_i via t = (1+u)/(1-u); N_{g,n}(mu) is the
// coefficient of prod u_i^{mu_i}. Computed at two truncation orders as a
// sufficiency assertion.
Rational LatticeEngine::ngn(int g, const std::vector<long>& mu) {
    if (!stable(g, static_cast<int>(mu.size()))) throw UsageError("ngn: unstable (g,n)");
    for (long p : mu)
        if (p <= 0) throw UsageError("ngn: parts must be positive");
    CountKey key(g, mu);
    Rational cached;
    if (n_memo_.lookup(key, cached)) return cached;

    MultiLaurent F = fgnL(g, static_cast<int>(mu.size()));
    long maxp = *std::max_element(key.parts.begin(), key.parts.end());
    Rational v1 = ngn_at_order(F, key.parts, static_cast<int>(maxp) + 1);
    Rational v2 = ngn_at_order(F, key.parts, static_cast<int>(maxp) + 3);
    if (v1 != v2) throw TruncationError("ngn: truncation order insufficient");
    n_memo_.store(key, v1);
    return v1;
}

Rational LatticeEngine::ngn_at_order(const MultiLaurent& f, const std::vector<long>& mu,
                                     int order) {
    // t(u) = (1+u)/(1-u) = 1 + 2u + 2u^2 + ...
    LaurentSeries t(ExpansionPoint::Zero, order, Rational(0));
    t.set_coeff(0, Rational(1));
    for (int k = 1; k <= order; ++k) t.set_coeff(k, Rational(2));

    std::map<int, LaurentSeries> powers;
    auto power_series = [&](int e) -> const LaurentSeries& {
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, t.power(e)).first;
        return it->second;
    };

    const int n = static_cast<int>(mu.size());
    Rational sum(0);
    for (const auto& [e, c] : f.terms()) {
        Rational prod = c;
        for (int i = 0; i < n && !prod.is_zero(); ++i)
            prod *= power_series(e[i]).coeff(static_cast<int>(mu[i]));
        sum += prod;
    }
    return sum;
}

Rational LatticeEngine::euler_special(int g, int n) {
    return fgnL(g, n).eval(std::vector<Rational>(n, Rational(1)));
}

DinNReport LatticeEngine::din_n_check(int g, const std::vector<long>& mu,
                                      DessinEngine& dessins) {
    DinNReport report;
    const int n = static_cast<int>(mu.size());
    report.lhs = dessins.dgn(g, mu);

    // Finite sum: binom(mu_i, l_i) vanishes for l_i > mu_i.
    std::vector<long> l(n);
    Rational total(0);
    std::function<void(int, Rational)> rec = [&](int i, Rational weight) {
        if (i == n) {
            std::vector<long> nu(n);
            for (int k = 0; k < n; ++k) nu[k] = 2 * l[k] - mu[k];
            total += weight * ngn(g, nu);
            return;
        }
        for (l[i] = mu[i] / 2 + 1; l[i] <= mu[i]; ++l[i]) {
            Rational w = Rational(2 * l[i] - mu[i], mu[i]) * Rational(binomial(mu[i], l[i]));
            rec(i + 1, weight * w);
        }
    };
    rec(0, Rational(1));
    report.rhs = total;
    report.pass = (report.lhs == report.rhs);
    return report;
}

MultiLaurent LatticeEngine::psi_leading_polynomial(int g, int n, PsiEngine& psi) {
    MultiLaurent expect(n);
    long shell = 3L * g - 3 + n;
    if (shell < 0) return expect;
    std::vector<std::vector<long>> comps;
    compositions_into(shell, n, comps);
    Rational front = Rational(((n % 2) ? -1 : 1)) / Rational(int_pow(2, 2L * g - 2 + n));
    for (const auto& d : comps) {
        Rational c = psi.tau(g, d);
        if (c.is_zero()) continue;
        for (int i = 0; i < n; ++i) {
            c *= Rational(double_factorial(2 * d[i] - 1));
            c /= Rational(int_pow(2, 2 * d[i] + 1));
        }
        Exp e(n);
        for (int i = 0; i < n; ++i) e[i] = static_cast<int>(2 * d[i] + 1);
        expect.add_term(e, c * front);
    }
    return expect;
}

MultiLaurent LatticeEngine::leading_terms(int g, int n, PsiEngine& psi) {
    MultiLaurent top = fgnL(g, n).top_homogeneous();
    MultiLaurent expect = psi_leading_polynomial(g, n, psi);
    if (top != expect)
        throw Error("leading_terms: top of F^L does not match the psi polynomial for (" +
                    std::to_string(g) + "," + std::to_string(n) + ")");
    return top;
}

}  // namespace spectral
