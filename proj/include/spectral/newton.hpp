#pragma once

#include <functional>

#include "spectral/series.hpp"

namespace spectral {

// Newton iteration s <- s - F(s)/dF(s) on truncated Laurent series.
// The seed must satisfy the constraint to positive valuation and dF(seed)
// must be invertible; every iteration at least doubles the verified order.
// Throws SolverFailure if the residual stops improving before `order`.
LaurentSeries newton_solve(const std::function<LaurentSeries(const LaurentSeries&)>& F,
                           const std::function<LaurentSeries(const LaurentSeries&)>& dF,
                           const LaurentSeries& seed, int order, int max_iter = 64);

// exp(f) for a series of positive valuation at Zero.
LaurentSeries series_exp(const LaurentSeries& f);

// The Catalan generating series z(x) = sum_m C_m x^{-2m-1}, solved from
// z^2 - x z + 1 = 0 at infinity. `order` is in powers of 1/x.
LaurentSeries catalan_series_newton(int order);
// Same series assembled directly from the closed-form coefficients.
LaurentSeries catalan_series_direct(int order);

// The tree function z(X) = sum_m m^{m-1} X^m / m!, solved from z = X e^z.
LaurentSeries tree_series(int order);

// w(t) = sum_{n>=2} t^{-n}/n, the shifted-log function whose level sets
// define the deck transformation of the Lambert curve.
LaurentSeries lambert_w_series(int order);

// Deck transformation s(t) = -t + 2/3 + 4/135 t^{-2} + ... at infinity,
// the nontrivial solution of w(s) = w(t). seed_trivial picks the branch:
// false gives s(t), true returns the identity solution t.
LaurentSeries deck_series(int order, bool seed_trivial = false);

}  // namespace spectral
