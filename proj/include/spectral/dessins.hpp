#pragma once

#include <optional>

#include "spectral/keys.hpp"
#include "spectral/multilaurent.hpp"
#include "spectral/series.hpp"

namespace spectral {

struct LaplaceMismatch {
    int g;
    std::vector<long> mu;
    Rational expected;  // prod(mu_i) * D_{g,n}(mu)
    Rational got;       // series coefficient
};

struct LaplaceReport {
    bool pass = true;
    std::optional<LaplaceMismatch> first_failure;
};

// Weighted counts of dessins (clean Belyi covers, dual-graph picture) and
// their Laplace-transformed differentials.
class DessinEngine {
public:
    // One vertex: C_m/(2m) for mu = 2m, zero for odd mu.
    Rational d01(long mu);
    // Two vertices, the Kodama-Pierce values; zero for mixed parity.
    Rational d02(long mu1, long mu2);

    // General (g, mu), memoized; closed forms for (0,1) and (0,2), the
    // edge-removal recursion otherwise (effective by induction on |mu|).
    Rational dgn(int g, const std::vector<long>& mu);

    // The left side mu1 * D minus the right side of the edge-removal
    // equation evaluated at an arbitrary key (closed forms on the right).
    // Used to assert the recursion's consistency at (0,2).
    Rational recursion_defect(int g, const std::vector<long>& mu);

    // Coefficient polynomial w of W^D_{g,n} = w dt_1...dt_n, computed by
    // the Laplace-transformed differential recursion from the (1,1) and
    // (0,3) seeds.
    MultiLaurent wgnD(int g, int n);

    // Fixed unstable form: w^D_{0,2}(t1,t2) = 1/(t1+t2)^2.
    static MultiLaurent w02D();

    // Expands wgnD(g,n) through t(x) and checks every coefficient
    // against the weighted counts, for all mu with |mu| <= max_weight.
    LaplaceReport laplace_check(int g, int n, long max_weight);

    const MemoTable<CountKey, Rational>& table() const { return memo_; }
    MemoTable<CountKey, Rational>& table_mut() { return memo_; }

private:
    Rational dgn_sorted(const CountKey& key);
    Rational recursion_rhs(int g, const std::vector<long>& sorted_mu);

    MemoTable<CountKey, Rational> memo_;
    MemoTable<std::pair<int, int>, MultiLaurent> w_memo_;
};

// t as a power series in u = 1/x on the branch through t = -1:
// t + 1 = -sum_m 2 binom(m, floor(m/2)) u^{m+1}.
LaurentSeries t_in_x_series(int order);

}  // namespace spectral
