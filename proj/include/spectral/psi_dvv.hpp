#pragma once

#include "spectral/keys.hpp"
#include "spectral/multilaurent.hpp"

namespace spectral {

// psi-class intersection numbers by the Virasoro (DVV) recursion, and the
// same data recomputed independently as the polynomials w^K_{g,n} of the
// residue-evaluated topological recursion on the curve x = y^2. The two
// routes are cross-checked by equivalence_check.
class PsiEngine {
public:
    // <tau_{d_1} ... tau_{d_n}>_{g,n}; zero off the dimension shell
    // sum d_i = 3g - 3 + n and for unstable (g,n).
    Rational tau(int g, std::vector<long> d);

    // Normalized bracket <sigma_{d_1}...>: tau times prod (2d_i+1)!!.
    Rational sigma(int g, std::vector<long> d);

    // w^K_{g,n}(t_1..t_n): polynomial in the t_i^2 computed by the
    // residue-evaluated recursion, seeded by w_{0,3} = 1, w_{1,1} = t^2/8.
    MultiLaurent wgnK(int g, int n);

    // Rebuilds w^K from the tau table and compares with wgnK.
    bool equivalence_check(int g, int n);

    // sum over d with |d| = 3g-3+n of <sigma_d> prod t_i^{2d_i},
    // assembled from the DVV route (used by equivalence_check and the
    // leading-order bridges of the other engines).
    MultiLaurent wgnK_from_tau(int g, int n);

    const MemoTable<CountKey, Rational>& sigma_table() const { return sigma_memo_; }

private:
    Rational sigma_sorted(const CountKey& key);

    MemoTable<CountKey, Rational> sigma_memo_;
    MemoTable<std::pair<int, int>, MultiLaurent> w_memo_;
};

}  // namespace spectral
