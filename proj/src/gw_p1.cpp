#include "spectral/gw_p1.hpp"

#include <algorithm>

#include "spectral/dessins.hpp"
#include "spectral/newton.hpp"

namespace spectral {

namespace {
bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

Rational inv_square_fact(long m) {  // 1/(m!)^2
    mpz_class f = factorial(m);
    return Rational(mpz_class(1), mpz_class(f * f));
}
}  // namespace

MultiLaurent GwP1Engine::basis_poly(int k, bool is_eta) {
    if (k < 0) throw UsageError("xi/eta: negative index");
    {
        std::lock_guard<std::mutex> lock(basis_mu_);
        auto it = basis_cache_.find({k, is_eta});
        if (it != basis_cache_.end()) return it->second;
    }
    MultiLaurent result(1);
    if (k == 0) {
        // xi0 = -(t^2-1)/(4t), eta0 = -(t+1)^2/(4t)
        MultiLaurent one = MultiLaurent::constant(1, Rational(1));
        if (!is_eta) {
            result = (MultiLaurent::var(1, 0, 2) - one).shift({-1}).scale(Rational(-1, 4));
        } else {
            MultiLaurent tp1 = MultiLaurent::var(1, 0) + one;
            result = (tp1 * tp1).shift({-1}).scale(Rational(-1, 4));
        }
    } else {
        // (t^4-1)/(8t) d/dt - c, with c = 1/2 for xi and 1 for eta
        MultiLaurent prev = basis_poly(k - 1, is_eta);
        MultiLaurent op = (MultiLaurent::var(1, 0, 4) - MultiLaurent::constant(1, Rational(1)))
                              .shift({-1})
                              .scale(Rational(1, 8));
        result = op * prev.derivative(0) - prev.scale(is_eta ? Rational(1) : Rational(1, 2));
    }
    std::lock_guard<std::mutex> lock(basis_mu_);
    basis_cache_.emplace(std::make_pair(k, is_eta), result);
    return result;
}

MultiLaurent GwP1Engine::xi(int k) { return basis_poly(k, false); }
MultiLaurent GwP1Engine::eta(int k) { return basis_poly(k, true); }

// Closed forms from the degree constraint 2g - 2 + 2d = |mu|.
Rational GwP1Engine::gw_closed(int g, const std::vector<long>& mu) {
    if (g < 0) return Rational(0);
    const int n = static_cast<int>(mu.size());
    for (long m : mu)
        if (m < 0) return Rational(0);
    long total = 0;
    for (long m : mu) total += m;
    long twice_d = total - (2L * g - 2);
    if (twice_d < 0 || (twice_d & 1)) return Rational(0);
    long d = twice_d / 2;

    if (n == 1) {
        if (g == 0) {
            // <tau_{2d-2}>_{0,1} = (1/d!)^2, d >= 1
            return d >= 1 ? inv_square_fact(d) : Rational(0);
        }
        // <tau_{2g-2+2d}>_{g,1} = (1/d!)^2 sum_l binom(2d-1,l) S(g,l)
        Rational sum(0);
        for (long l = 1; l <= g; ++l) {
            std::vector<std::vector<long>> comps;
            compositions_into(g - l, static_cast<int>(l), comps);  // k_i - 1 >= 0
            Rational s(0);
            for (const auto& c : comps) {
                Rational prod(1);
                for (long ci : c) {
                    long ki = ci + 1;
                    prod /= Rational(mpz_class(factorial(2 * ki + 1) * int_pow(4, ki)));
                }
                s += prod;
            }
            sum += binomial_poly(2 * d - 1, l) * s;
        }
        return inv_square_fact(d) * sum;
    }
    if (n == 2 && g == 0) {
        bool o1 = mu[0] & 1, o2 = mu[1] & 1;
        if (o1 != o2) return Rational(0);
        long m1 = mu[0] / 2, m2 = mu[1] / 2;
        if (!o1) return inv_square_fact(m1) * inv_square_fact(m2) / Rational(m1 + m2 + 1);
        return inv_square_fact(m1) * inv_square_fact(m2) / Rational(m1 + m2 + 2);
    }
    if (n == 3 && g == 0) {
        int odd = 0;
        for (long m : mu) odd += static_cast<int>(m & 1);
        if (odd != 0 && odd != 2) return Rational(0);
        Rational prod(1);
        for (long m : mu) {
            long h = m / 2;
            if ((m & 1) == 0)
                prod *= inv_square_fact(h);
            else
                prod /= Rational(mpz_class(factorial(h) * factorial(h + 1)));
        }
        return prod;
    }
    throw Unsupported("gw_closed: key outside the closed-form families");
}

MultiLaurent GwP1Engine::f_closed(int g, int n) {
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (f_memo_.lookup(key, cached)) return cached;

    MultiLaurent F(n);
    if (g == 0 && n == 3) {
        auto at = [&](const MultiLaurent& p, int slot) { return p.embed(3, {slot}); };
        MultiLaurent x0 = xi(0), e0 = eta(0);
        F = at(x0, 0) * at(x0, 1) * at(x0, 2) + at(x0, 0) * at(e0, 1) * at(e0, 2) +
            at(e0, 0) * at(x0, 1) * at(e0, 2) + at(e0, 0) * at(e0, 1) * at(x0, 2);
    } else if (n == 1 && g >= 1) {
        // Xi_l: binom(2d-1, l) expanded in powers of d, d^i replaced by xi_i.
        MultiLaurent sum(1);
        for (long l = 1; l <= g; ++l) {
            // coefficients of the polynomial binom(2d-1, l) in d
            std::vector<Rational> poly(l + 1, Rational(0));
            poly[0] = Rational(1);
            int deg = 0;
            for (long i = 0; i < l; ++i) {
                // multiply by (2d - 1 - i)
                std::vector<Rational> next(l + 1, Rational(0));
                for (int a = 0; a <= deg; ++a) {
                    next[a + 1] += poly[a] * Rational(2);
                    next[a] += poly[a] * Rational(-1 - i);
                }
                ++deg;
                poly = next;
            }
            Rational lf = Rational(factorial(l)).invert();
            MultiLaurent Xi(1);
            for (int a = 0; a <= deg; ++a)
                if (!poly[a].is_zero()) Xi += xi(a).scale(poly[a] * lf);

            std::vector<std::vector<long>> comps;
            compositions_into(g - l, static_cast<int>(l), comps);
            Rational s(0);
            for (const auto& c : comps) {
                Rational prod(1);
                for (long ci : c) {
                    long ki = ci + 1;
                    prod /= Rational(mpz_class(factorial(2 * ki + 1) * int_pow(4, ki)));
                }
                s += prod;
            }
            sum += Xi.scale(s);
        }
        // apply (-(t^2-1)^2/(8t) d/dt)^{2g-2}
        MultiLaurent op = (MultiLaurent::var(1, 0, 2) - MultiLaurent::constant(1, Rational(1)));
        op = (op * op).shift({-1}).scale(Rational(-1, 8));
        F = sum;
        for (int i = 0; i < 2 * g - 2; ++i) F = op * F.derivative(0);
    } else {
        throw Unsupported("f_closed: only (0,3) and (g>=1, 1) have closed forms");
    }

    f_memo_.store(key, F);
    return F;
}

LaurentSeries GwP1Engine::log_factor_series(ExpansionPoint point, int order) {
    // L(t) = log((t-1)^2/(t+1)^2) integrates 4/(t^2-1) with the constant
    // fixed to 0 at the expansion point; in the local coordinate the same
    // coefficients appear at 0 and infinity:
    //   L = -4 sum_k u^{2k+1}/(2k+1).
    // Then t*L has an invertible leading coefficient and
    // Lambda = 4/(t L) is an honest Laurent series.
    LaurentSeries L(point, order + 4, Rational(0));
    for (int k = 0; 2 * k + 1 <= order + 4; ++k)
        L.set_coeff(2 * k + 1, Rational(-4, 2 * k + 1));
    LaurentSeries t = identity_series_q(point, order + 4);
    LaurentSeries tl = t * L;
    return tl.reciprocal().scale(Rational(4)).truncated(order);
}

PolySeries GwP1Engine::kernel_series(ExpansionPoint point, int order, int arity) {
    const MultiLaurent zero(arity);
    const int work = order + 6;

    // (1/(t+t1) + 1/(t-t1)) expanded in the regime of the point.
    PolySeries pair_sum(point, work, zero);
    if (point == ExpansionPoint::Zero) {
        // -2 sum_j t^{2j+1} / t1^{2j+2}
        for (int j = 0; 2 * j + 1 <= work; ++j) {
            Exp e(arity, 0);
            e[0] = -(2 * j + 2);
            pair_sum.set_coeff(2 * j + 1, MultiLaurent::monomial(arity, e, Rational(-2)));
        }
    } else {
        // 2 sum_j t1^{2j} u^{2j+1}
        for (int j = 0; 2 * j + 1 <= work; ++j) {
            Exp e(arity, 0);
            e[0] = 2 * j;
            pair_sum.set_coeff(2 * j + 1, MultiLaurent::monomial(arity, e, Rational(2)));
        }
    }

    PolySeries lambda = lift_series(log_factor_series(point, work), arity);
    MultiLaurent one = MultiLaurent::constant(1, Rational(1));
    MultiLaurent sq = (MultiLaurent::var(1, 0, 2) - one) * (MultiLaurent::var(1, 0, 2) - one);
    PolySeries squared = lift_series(
        [&] {
            LaurentSeries s(point, work, Rational(0));
            for (const auto& [e, c] : sq.terms())
                s.set_coeff(point == ExpansionPoint::Zero ? e[0] : -e[0], c);
            return s;
        }(),
        arity);

    return (pair_sum * lambda * squared).scale(MultiLaurent::constant(arity, Rational(1, 64)))
        .truncated(order);
}

// Residues at t = 0 (inner circle, positive) and t = infinity (outer
// circle, negative): the value is the t^{-1} coefficient at 0 minus the
// t^{-1} coefficient at infinity.
MultiLaurent GwP1Engine::eo_p1_at_order(int g, int n, int order) {
    const MultiLaurent zero(n);
    MultiLaurent result(n);

    for (ExpansionPoint pt : {ExpansionPoint::Zero, ExpansionPoint::Infinity}) {
        PolySeries kernel = kernel_series(pt, order, n);
        PolySeries T = identity_series(n, pt, order);

        PolySeries bracket(pt, order, zero);
        if (g == 1 && n == 1) {
            // regularized W_{0,2}(t, -t): -1/(4 t^2)
            PolySeries b(pt, order, zero);
            b.set_coeff(pt == ExpansionPoint::Zero ? -2 : 2,
                        MultiLaurent::constant(n, Rational(-1, 4)));
            bracket = b;
        } else {
            MultiLaurent inner(n);
            if (g >= 1 && stable(g - 1, n + 1)) {
                std::vector<int> vm(n + 1);
                vm[0] = 0;
                vm[1] = 0;
                for (int i = 2; i <= n; ++i) vm[i] = i - 1;
                inner += eo_p1(g - 1, n + 1).embed(n, vm);
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
                    inner += eo_p1(g1, szI + 1).embed(n, vmI) * eo_p1(g2, szJ + 1).embed(n, vmJ);
                }
            }
            std::vector<VarAssign> assign(n);
            assign[0] = {&T, -1};
            for (int i = 1; i < n; ++i) assign[i] = {nullptr, i};
            bracket = substitute_vars(inner, assign, n, pt, order);

            // (0,2)-factors: (1/(t+t_j)^2 + 1/(t-t_j)^2) w_{g,n-1}(t, rest)
            if (n >= 2) {
                MultiLaurent prev = eo_p1(g, n - 1);
                for (int j = 1; j < n; ++j) {
                    PolySeries pair2(pt, order, zero);
                    if (pt == ExpansionPoint::Zero) {
                        // 2 sum_k (2k+1) t^{2k} / t_j^{2k+2}
                        for (int k = 0; 2 * k <= order; ++k) {
                            Exp e(n, 0);
                            e[j] = -(2 * k + 2);
                            pair2.set_coeff(2 * k,
                                            MultiLaurent::monomial(n, e, Rational(2 * (2 * k + 1))));
                        }
                    } else {
                        // 2 sum_k (2k+1) t_j^{2k} u^{2k+2}
                        for (int k = 0; 2 * k + 2 <= order; ++k) {
                            Exp e(n, 0);
                            e[j] = 2 * k;
                            pair2.set_coeff(2 * k + 2,
                                            MultiLaurent::monomial(n, e, Rational(2 * (2 * k + 1))));
                        }
                    }
                    std::vector<VarAssign> a2(n - 1);
                    a2[0] = {&T, -1};
                    int slot = 1;
                    for (int i = 1; i < n; ++i)
                        if (i != j) a2[slot++] = {nullptr, i};
                    bracket = bracket + pair2 * substitute_vars(prev, a2, n, pt, order);
                }
            }
            bracket = -bracket;
        }

        MultiLaurent res = (kernel * bracket).residue();
        if (pt == ExpansionPoint::Zero)
            result += res;
        else
            result -= res;
    }
    return result;
}

MultiLaurent GwP1Engine::eo_p1(int g, int n) {
    if (!stable(g, n)) throw UsageError("eo_p1: unstable (g,n)");
    std::pair<int, int> key{g, n};
    MultiLaurent cached;
    if (w_memo_.lookup(key, cached)) return cached;

    int order = 4 * (3 * g - 3 + n) + 10;
    MultiLaurent w = eo_p1_at_order(g, n, order);
    for (int tries = 0;; ++tries) {
        MultiLaurent check = eo_p1_at_order(g, n, order + 4);
        if (check == w) break;
        if (tries >= 4) throw TruncationError("eo_p1: truncation did not stabilize");
        order *= 2;
        w = eo_p1_at_order(g, n, order);
    }

    w_memo_.store(key, w);
    return w;
}

NorburyScottReport GwP1Engine::norbury_scott_report(int g, int n) {
    MultiLaurent F = f_closed(g, n);
    for (int i = 0; i < n; ++i) F = F.derivative(i);
    MultiLaurent W = eo_p1(g, n);
    NorburyScottReport r{g, n, W == F, W - F};
    return r;
}

AnnulusReport GwP1Engine::annulus_check(long order, bool dessin_flavor) {
    AnnulusReport report;
    const int ord = static_cast<int>(2 * order + 4);
    LaurentSeries z = catalan_series_direct(ord);

    // Coefficients of -log(1 - z(x1) z(x2)) = sum_k (z1 z2)^k / k:
    // A(a, b) = sum_k (1/k) [u^a] z^k [u^b] z^k.
    long amax = dessin_flavor ? order : order + 1;
    std::vector<LaurentSeries> zpow;
    zpow.push_back(z);
    while (static_cast<long>(zpow.size()) < amax) zpow.push_back(zpow.back() * z);

    auto coefficient = [&](long a, long b) {
        Rational sum(0);
        for (long k = 1; k <= std::min(a, b); ++k)
            sum += (zpow[k - 1].coeff(static_cast<int>(a)) *
                    zpow[k - 1].coeff(static_cast<int>(b))) /
                   Rational(k);
        return sum;
    };

    if (dessin_flavor) {
        for (long m1 = 1; m1 <= order && report.pass; ++m1)
            for (long m2 = 1; m2 <= order; ++m2) {
                Rational expected = DessinEngine().d02(m1, m2);
                Rational got = coefficient(m1, m2);
                if (expected != got) {
                    report.pass = false;
                    report.first_failure = AnnulusMismatch{m1, m2, expected, got};
                    break;
                }
            }
    } else {
        for (long m1 = 0; m1 <= order && report.pass; ++m1)
            for (long m2 = 0; m2 <= order; ++m2) {
                Rational expected =
                    gw_closed(0, {m1, m2}) * Rational(mpz_class(factorial(m1) * factorial(m2)));
                Rational got = coefficient(m1 + 1, m2 + 1);
                if (expected != got) {
                    report.pass = false;
                    report.first_failure = AnnulusMismatch{m1, m2, expected, got};
                    break;
                }
            }
    }
    return report;
}

MultiLaurent GwP1Engine::psi_leading_polynomial(int g, int n, PsiEngine& psi) {
    Rational front = Rational((n % 2) ? -1 : 1) /
                     Rational(int_pow(16, 2L * g - 2 + n));
    return psi.wgnK_from_tau(g, n).scale(front);
}

}  // namespace spectral
