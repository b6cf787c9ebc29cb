#pragma once

#include "spectral/dessins.hpp"
#include "spectral/keys.hpp"
#include "spectral/multilaurent.hpp"
#include "spectral/psi_dvv.hpp"

namespace spectral {

struct DinNReport {
    bool pass = true;
    Rational lhs;  // D_{g,n}(mu)
    Rational rhs;  // binomial-weighted sum over lattice counts
};

// Lattice-point counting functions of the moduli space, computed through
// the differential recursion for F^L_{g,n} and validated against the
// dessin counts via the binomial identity.
class LatticeEngine {
public:
    // F^L_{g,n}(t_1..t_n); seeds F_{1,1} and F_{0,3}.
    MultiLaurent fgnL(int g, int n);

    // N_{g,n}(mu): coefficient of prod z_i^{-mu_i} in F^L.
    Rational ngn(int g, const std::vector<long>& mu);

    // F^L at t_i = 1; equals (-1)^n Euler characteristic of moduli.
    Rational euler_special(int g, int n);

    // Checks D_{g,n}(mu) = sum over l of prod ((2l_i-mu_i)/mu_i) binom(mu_i,l_i)
    // N_{g,n}(2l - mu) against the dessin engine.
    DinNReport din_n_check(int g, const std::vector<long>& mu, DessinEngine& dessins);

    // Top-degree homogeneous part of F^L; throws if it does not match the
    // psi-intersection generating polynomial.
    MultiLaurent leading_terms(int g, int n, PsiEngine& psi);

    // The psi-side of the leading-term comparison:
    // (-1)^n / 2^{2g-2+n} sum <tau...> prod (2d_j-1)!! (t_j/2)^{2d_j+1}.
    static MultiLaurent psi_leading_polynomial(int g, int n, PsiEngine& psi);

    const MemoTable<CountKey, Rational>& n_table() const { return n_memo_; }

private:
    MemoTable<std::pair<int, int>, MultiLaurent> f_memo_;
    MemoTable<CountKey, Rational> n_memo_;

    Rational ngn_at_order(const MultiLaurent& f, const std::vector<long>& mu, int order);
};

}  // namespace spectral
