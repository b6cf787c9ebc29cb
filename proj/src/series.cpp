#include "spectral/series.hpp"

namespace spectral {

PolySeries poly_to_series(const MultiLaurent& poly, int v, ExpansionPoint point, int order) {
    PolySeries r(point, order, MultiLaurent(poly.arity()));
    for (const auto& [e, c] : poly.terms()) {
        for (int i = 0; i < poly.arity(); ++i)
            if (i != v && e[i] != 0)
                throw UsageError("poly_to_series: polynomial is not univariate in v");
        int k = point == ExpansionPoint::Zero ? e[v] : -e[v];
        r.add_coeff(k, MultiLaurent::constant(poly.arity(), c));
    }
    return r;
}

PolySeries identity_series(int arity, ExpansionPoint point, int order) {
    PolySeries r(point, order, MultiLaurent(arity));
    r.set_coeff(point == ExpansionPoint::Zero ? 1 : -1, MultiLaurent::constant(arity, Rational(1)));
    return r;
}

LaurentSeries identity_series_q(ExpansionPoint point, int order) {
    LaurentSeries r(point, order, Rational(0));
    r.set_coeff(point == ExpansionPoint::Zero ? 1 : -1, Rational(1));
    return r;
}

PolySeries lift_series(const LaurentSeries& s, int arity) {
    PolySeries r(s.point(), s.order(), MultiLaurent(arity));
    for (const auto& [k, c] : s.coeffs()) r.set_coeff(k, MultiLaurent::constant(arity, c));
    return r;
}

PolySeries substitute_vars(const MultiLaurent& poly, const std::vector<VarAssign>& assign,
                           int out_arity, ExpansionPoint point, int order) {
    if (static_cast<int>(assign.size()) != poly.arity())
        throw UsageError("substitute_vars: assignment arity mismatch");
    const MultiLaurent zero(out_arity);
    PolySeries acc(point, order, zero);
    // Per-(variable, exponent) power cache.
    std::map<std::pair<int, int>, PolySeries> powers;
    for (const auto& [e, c] : poly.terms()) {
        Exp kept(out_arity, 0);
        PolySeries term(point, order, zero);
        term.set_coeff(0, MultiLaurent::constant(out_arity, c));
        for (int i = 0; i < poly.arity(); ++i) {
            if (e[i] == 0) continue;
            if (assign[i].series == nullptr) {
                kept[assign[i].target] += e[i];
            } else {
                auto key = std::make_pair(i, e[i]);
                auto it = powers.find(key);
                if (it == powers.end())
                    it = powers.emplace(key, assign[i].series->power(e[i])).first;
                term = term * it->second;
            }
        }
        bool trivial_monomial = true;
        for (int x : kept)
            if (x != 0) trivial_monomial = false;
        if (!trivial_monomial)
            term = term.scale(MultiLaurent::monomial(out_arity, kept, Rational(1)));
        acc = acc + term;
    }
    return acc;
}

}  // namespace spectral
