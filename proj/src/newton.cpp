#include "spectral/newton.hpp"

namespace spectral {

LaurentSeries newton_solve(const std::function<LaurentSeries(const LaurentSeries&)>& F,
                           const std::function<LaurentSeries(const LaurentSeries&)>& dF,
                           const LaurentSeries& seed, int order, int max_iter) {
    LaurentSeries s = seed;
    int best = INT32_MIN;
    int stalled = 0;
    for (int it = 0; it < max_iter; ++it) {
        LaurentSeries r = F(s);
        if (r.order() < order)
            throw TruncationError("newton_solve: residual order below target; widen the seed");
        if (r.is_zero() || r.valuation() > order) return s.truncated(order);
        int v = r.valuation();
        if (v <= best && ++stalled >= 2)
            throw SolverFailure("newton_solve: residual valuation stalled");
        if (v > best) {
            best = v;
            stalled = 0;
        }
        s = s - r * dF(s).reciprocal();
    }
    throw SolverFailure("newton_solve: iteration budget exhausted");
}

LaurentSeries series_exp(const LaurentSeries& f) {
    if (f.point() != ExpansionPoint::Zero || (!f.is_zero() && f.valuation() < 1))
        throw UsageError("series_exp: need positive valuation at zero");
    LaurentSeries e(ExpansionPoint::Zero, f.order(), Rational(0));
    Rational fact(1);
    for (int k = 0; k <= f.order(); ++k) {
        if (k > 0) fact *= Rational(k);
        e.set_coeff(k, fact.invert());
    }
    return series_compose(e, f);
}

LaurentSeries catalan_series_newton(int order) {
    // z^2 - x z + 1 = 0 in powers of 1/x; x itself is u^{-1}, so each
    // residual evaluation costs one order of precision.
    const int work = order + 4;
    auto x = [work] { return identity_series_q(ExpansionPoint::Infinity, work + 2); };
    auto F = [&](const LaurentSeries& z) {
        LaurentSeries one(ExpansionPoint::Infinity, z.order(), Rational(0));
        one.set_coeff(0, Rational(1));
        return z * z - x() * z + one;
    };
    auto dF = [&](const LaurentSeries& z) { return z.scale(Rational(2)) - x(); };
    LaurentSeries seed(ExpansionPoint::Infinity, work, Rational(0));
    seed.set_coeff(1, Rational(1));  // 1/x
    return newton_solve(F, dF, seed, order).truncated(order);
}

LaurentSeries catalan_series_direct(int order) {
    LaurentSeries z(ExpansionPoint::Infinity, order, Rational(0));
    for (long m = 0; 2 * m + 1 <= order; ++m) z.set_coeff(2 * m + 1, catalan(m));
    return z;
}

LaurentSeries tree_series(int order) {
    auto X = [order] { return identity_series_q(ExpansionPoint::Zero, order + 1); };
    auto F = [&](const LaurentSeries& z) { return z - X() * series_exp(z); };
    auto dF = [&](const LaurentSeries& z) {
        LaurentSeries one(ExpansionPoint::Zero, z.order(), Rational(0));
        one.set_coeff(0, Rational(1));
        return one - X() * series_exp(z);
    };
    LaurentSeries seed(ExpansionPoint::Zero, order, Rational(0));
    seed.set_coeff(1, Rational(1));  // z ~ X
    return newton_solve(F, dF, seed, order);
}

LaurentSeries lambert_w_series(int order) {
    LaurentSeries w(ExpansionPoint::Infinity, order, Rational(0));
    for (int n = 2; n <= order; ++n) w.set_coeff(n, Rational(1, n));
    return w;
}

LaurentSeries deck_series(int order, bool seed_trivial) {
    // dF has valuation 3 at the solution, so the residual must vanish three
    // orders past the requested one; the working order also absorbs the
    // slow order decay of the iteration itself.
    const int work = order + 20;
    const int target = order + 3;
    LaurentSeries w = lambert_w_series(work + 2);
    auto F = [&](const LaurentSeries& s) {
        return series_compose(w, s) - lambert_w_series(s.order() + 2);
    };
    // w'(s) = -1/(s^2 (s-1))
    auto dF = [&](const LaurentSeries& s) {
        LaurentSeries one(ExpansionPoint::Infinity, s.order(), Rational(0));
        one.set_coeff(0, Rational(1));
        return -(s * s * (s - one)).reciprocal();
    };
    LaurentSeries seed(ExpansionPoint::Infinity, work, Rational(0));
    seed.set_coeff(-1, seed_trivial ? Rational(1) : Rational(-1));
    if (!seed_trivial) seed.set_coeff(0, Rational(2, 3));
    return newton_solve(F, dF, seed, target).truncated(order);
}

}  // namespace spectral
