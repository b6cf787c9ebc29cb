#pragma once

#include <map>

#include "spectral/keys.hpp"
#include "spectral/multilaurent.hpp"
#include "spectral/series.hpp"

namespace spectral {

// Single Hurwitz numbers H_g(mu) via cut-and-join, their polynomial
// Laplace transforms in the xi-hat basis, the Lambert-curve deck
// transformation, and the residue form of the topological recursion.
class HurwitzEngine {
public:
    // Unstable closed forms H_0((d)) and H_0((mu1, mu2)).
    static Rational h_unstable(const std::vector<long>& mu);

    // r(g, mu) = 2g - 2 + n + |mu|, the simple ramification count.
    static long ram_count(int g, const std::vector<long>& mu);

    // H_g(mu) by cut-and-join; every recursive term drops r by one.
    Rational cut_and_join(int g, const std::vector<long>& mu);

    // xi-hat_k(t): degree 2k+1 polynomials, xi0 = t-1,
    // xi_k = t^2 (t-1) d/dt xi_{k-1}. Negative indices -1, -2 are the
    // documented specials (t-1)/t and (1 - 1/t^2)/2.
    MultiLaurent xihat(int k);

    // Exact fit H_g(mu) = sum_{|k| <= 3g-3+n} c_k prod mu_i^{mu_i+k_i}/mu_i!
    // over the tensor grid {1..3g-2+n}^n, with one extra consistency row.
    // Keys are sorted-descending exponent vectors.
    std::map<std::vector<long>, Rational> elsv_fit(int g, int n);

    // F^H_{g,n} = sum_k c_k prod xihat_{k_i}(t_i) from the fit.
    MultiLaurent f_hurwitz(int g, int n);

    // Deck transformation s(t) of the Lambert curve.
    LaurentSeries deck_s(int order);

    // Polynomial coefficient of W^H_{g,n}, from the residue-at-infinity
    // form of the topological recursion with adaptive truncation.
    MultiLaurent eo_hurwitz(int g, int n);

    const MemoTable<CountKey, Rational>& table() const { return memo_; }
    MemoTable<CountKey, Rational>& table_mut() { return memo_; }

private:
    MultiLaurent eo_hurwitz_at_order(int g, int n, int order);

    MemoTable<CountKey, Rational> memo_;
    MemoTable<std::pair<int, int>, MultiLaurent> w_memo_;
    MemoTable<std::pair<int, int>, MultiLaurent> f_memo_;
    std::map<int, MultiLaurent> xihat_cache_;
    std::mutex xihat_mu_;
};

}  // namespace spectral
