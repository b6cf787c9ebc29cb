#pragma once

#include <optional>

#include "spectral/keys.hpp"
#include "spectral/multilaurent.hpp"
#include "spectral/psi_dvv.hpp"
#include "spectral/series.hpp"

namespace spectral {

struct NorburyScottReport {
    int g, n;
    bool match;
    MultiLaurent diff;  // eo_p1 - d1..dn f_closed
};

struct AnnulusMismatch {
    long mu1, mu2;
    Rational expected, got;
};

struct AnnulusReport {
    bool pass = true;
    std::optional<AnnulusMismatch> first_failure;
};

// Stationary Gromov-Witten invariants of the projective line: closed-form
// generating functions in the xi/eta basis, the log-kernel series, and the
// residue recursion for W^{P1}_{g,n}.
class GwP1Engine {
public:
    // xi_k and eta_k: Laurent polynomials of degree 2k+1 with
    // xi_k(1/t) = -xi_k(t), eta_k(1/t) = eta_k(t).
    MultiLaurent xi(int k);
    MultiLaurent eta(int k);

    // Closed-form stationary invariants <tau_{mu_1}(w)...>:
    // n = 1 for any g, n = 2 and n = 3 at genus zero.
    Rational gw_closed(int g, const std::vector<long>& mu);

    // Closed-form F^{P1}: (0,3), and (g,1) for g >= 1.
    MultiLaurent f_closed(int g, int n);

    // Kernel expansion at 0 or infinity; coefficients are Laurent
    // polynomials in t_1 (variable 0 of the given arity).
    PolySeries kernel_series(ExpansionPoint point, int order, int arity = 1);

    // The transcendental factor 4 / (t log((t-1)^2/(t+1)^2)).
    LaurentSeries log_factor_series(ExpansionPoint point, int order);

    // W^{P1}_{g,n} coefficient polynomial by residues at 0 and infinity.
    MultiLaurent eo_p1(int g, int n);

    NorburyScottReport norbury_scott_report(int g, int n);

    // Coefficient comparison of -log(1 - z(x1) z(x2)) against the closed
    // (0,2) data; `dessin_flavor` checks the weighted dessin counts
    // instead of the stationary invariants.
    AnnulusReport annulus_check(long order, bool dessin_flavor = false);

    // The psi-side of the leading-order comparison (same normalization as
    // the Witten-Kontsevich polynomials): (-1)^n/16^{2g-2+n} w^K.
    MultiLaurent psi_leading_polynomial(int g, int n, PsiEngine& psi);

private:
    MultiLaurent eo_p1_at_order(int g, int n, int order);
    MultiLaurent basis_poly(int k, bool eta);

    std::map<std::pair<int, bool>, MultiLaurent> basis_cache_;
    std::mutex basis_mu_;
    MemoTable<std::pair<int, int>, MultiLaurent> w_memo_;
    MemoTable<std::pair<int, int>, MultiLaurent> f_memo_;
};

}  // namespace spectral
