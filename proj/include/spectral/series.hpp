#pragma once

#include <map>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/multilaurent.hpp"
#include "spectral/rational.hpp"

namespace spectral {

enum class ExpansionPoint { Zero, Infinity };

inline std::string to_string(ExpansionPoint p) {
    return p == ExpansionPoint::Zero ? "zero" : "infinity";
}

// Truncated Laurent expansion in the local coordinate u, where u = t at
// Zero and u = 1/t at Infinity. Coefficients live in a commutative ring C
// (Rational, or MultiLaurent for kernel expansions whose coefficients are
// polynomials in the spectator variables). All coefficients with exponent
// <= order are stored exactly; nothing is known beyond the order.
template <class C>
class TruncatedSeries {
public:
    TruncatedSeries(ExpansionPoint point, int order, C zero)
        : point_(point), order_(order), zero_(std::move(zero)) {}

    ExpansionPoint point() const { return point_; }
    int order() const { return order_; }
    const C& zero_coeff() const { return zero_; }
    const std::map<int, C>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    // Smallest stored exponent; for a series that is zero to its order,
    // returns order+1 (the error floor).
    int valuation() const { return coeffs_.empty() ? order_ + 1 : coeffs_.begin()->first; }

    // Coefficient of u^k. Asking beyond the truncation order is an error.
    const C& coeff(int k) const {
        if (k > order_) throw TruncationError("series coefficient beyond truncation order");
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    // Coefficient of t^k in the underlying variable.
    const C& coeff_t(int k) const { return coeff(point_ == ExpansionPoint::Zero ? k : -k); }

    void set_coeff(int k, C c) {
        if (k > order_) return;  // beyond the truncation: discard
        if (is_zero_elem(c))
            coeffs_.erase(k);
        else
            coeffs_[k] = std::move(c);
    }

    void add_coeff(int k, const C& c) {
        if (k > order_) return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (!is_zero_elem(c)) coeffs_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (is_zero_elem(it->second)) coeffs_.erase(it);
        }
    }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries r(point_, std::min(order_, new_order), zero_);
        for (const auto& [k, c] : coeffs_) r.add_coeff(k, c);
        return r;
    }

    // Multiply by u^d.
    TruncatedSeries shifted(int d) const {
        TruncatedSeries r(point_, order_ + d, zero_);
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k + d, c);
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(point_, order_, zero_);
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, neg_elem(c));
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_point(b);
        TruncatedSeries r(a.point_, std::min(a.order_, b.order_), a.zero_);
        for (const auto& [k, c] : a.coeffs_) r.add_coeff(k, c);
        for (const auto& [k, c] : b.coeffs_) r.add_coeff(k, c);
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_point(b);
        int ord = std::min(a.valuation() + b.order_, b.valuation() + a.order_);
        TruncatedSeries r(a.point_, ord, a.zero_);
        for (const auto& [ka, ca] : a.coeffs_) {
            if (ka + b.valuation() > ord) break;
            for (const auto& [kb, cb] : b.coeffs_) {
                if (ka + kb > ord) break;
                r.add_coeff(ka + kb, ca * cb);
            }
        }
        return r;
    }

    TruncatedSeries scale(const C& c) const {
        TruncatedSeries r(point_, order_, zero_);
        for (const auto& [k, x] : coeffs_) r.add_coeff(k, x * c);
        return r;
    }

    // 1/f. Needs an invertible leading coefficient. A series with
    // valuation v known to order N has N - v correct relative terms, so
    // the reciprocal is exact to order N - 2v.
    TruncatedSeries reciprocal() const {
        if (is_zero()) throw NotInvertible("series reciprocal: zero leading coefficient");
        const int v = valuation();
        C lead_inv = invert_elem(coeffs_.begin()->second);
        const int ord = order_ - 2 * v;
        TruncatedSeries r(point_, ord, zero_);
        if (-v > ord) return r;
        r.coeffs_.emplace(-v, lead_inv);
        // g_{-v+m} = -f_v^{-1} * sum_{i=1..m} f_{v+i} g_{-v+m-i}
        for (int m = 1; m <= ord + v; ++m) {
            C acc = zero_;
            for (const auto& [k, c] : coeffs_) {
                int i = k - v;
                if (i < 1) continue;
                if (i > m) break;
                auto it = r.coeffs_.find(-v + m - i);
                if (it != r.coeffs_.end()) acc = acc + c * it->second;
            }
            if (!is_zero_elem(acc)) r.coeffs_.emplace(-v + m, neg_elem(lead_inv * acc));
        }
        return r;
    }

    // Integer power, via reciprocal for negative e.
    TruncatedSeries power(int e) const {
        if (e < 0) return reciprocal().power(-e);
        if (e == 0) {
            TruncatedSeries r(point_, order_, zero_);
            r.set_coeff(0, one_like());
            return r;
        }
        TruncatedSeries result = *this;
        for (int i = 1; i < e; ++i) result = result * *this;
        return result;
    }

    // d/du in the local coordinate.
    TruncatedSeries derivative_u() const {
        TruncatedSeries r(point_, order_ - 1, zero_);
        for (const auto& [k, c] : coeffs_)
            if (k != 0) r.add_coeff(k - 1, scale_int(c, k));
        return r;
    }

    // d/dt. At Zero d/dt = d/du; at Infinity d/dt = -u^2 d/du.
    TruncatedSeries derivative_t() const {
        if (point_ == ExpansionPoint::Zero) {
            TruncatedSeries r(point_, order_ - 1, zero_);
            for (const auto& [k, c] : coeffs_)
                if (k != 0) r.add_coeff(k - 1, scale_int(c, k));
            return r;
        }
        TruncatedSeries r(point_, order_ + 1, zero_);
        for (const auto& [k, c] : coeffs_)
            if (k != 0) r.add_coeff(k + 1, scale_int(c, -k));
        return r;
    }

    // Coefficient of t^{-1}; TruncationError if the order does not cover it.
    C residue() const {
        int k = point_ == ExpansionPoint::Zero ? -1 : 1;
        if (order_ < k) throw TruncationError("residue: series order insufficient");
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? zero_ : it->second;
    }

private:
    ExpansionPoint point_;
    int order_;
    C zero_;
    std::map<int, C> coeffs_;

    void check_point(const TruncatedSeries& o) const {
        if (point_ != o.point_) throw UsageError("series: expansion point mismatch");
    }

    static bool is_zero_elem(const Rational& x) { return x.is_zero(); }
    static bool is_zero_elem(const MultiLaurent& x) { return x.is_zero(); }
    static Rational neg_elem(const Rational& x) { return -x; }
    static MultiLaurent neg_elem(const MultiLaurent& x) { return -x; }
    static Rational invert_elem(const Rational& x) { return x.invert(); }
    static MultiLaurent invert_elem(const MultiLaurent& x) { return x.invert(); }
    static Rational scale_int(const Rational& x, int n) { return x * Rational(n); }
    static MultiLaurent scale_int(const MultiLaurent& x, int n) { return x.scale(Rational(n)); }
    C one_like() const;
};

template <>
inline Rational TruncatedSeries<Rational>::one_like() const {
    return Rational(1);
}

template <>
inline MultiLaurent TruncatedSeries<MultiLaurent>::one_like() const {
    return MultiLaurent::constant(zero_.arity(), Rational(1));
}

using LaurentSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<MultiLaurent>;

// Substitute the expansion coordinate of `outer` by the series `inner`:
// at Zero u = t |-> inner, at Infinity u = 1/t |-> 1/inner. The result is
// expanded at inner's point. The substituted series must have positive
// valuation after that interpretation.
template <class C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& outer, const TruncatedSeries<C>& inner) {
    TruncatedSeries<C> u = outer.point() == ExpansionPoint::Zero ? inner : inner.reciprocal();
    if (u.valuation() < 1)
        throw UsageError("series_compose: substituted series must have positive valuation");
    // Error floor from outer's own truncation: u^{order+1}.
    int ord = u.valuation() * (outer.order() + 1) - 1;
    TruncatedSeries<C> acc(inner.point(), ord, u.zero_coeff());
    for (const auto& [k, c] : outer.coeffs()) {
        if (k == 0) {
            acc.add_coeff(0, c);
            continue;
        }
        TruncatedSeries<C> p = u.power(k);
        acc = acc + p.scale(c);
    }
    return acc;
}

// A univariate Laurent polynomial in variable `v` of `poly`, viewed as an
// exact series at `point` with truncation `order`. The other variables of
// `poly` must not occur.
PolySeries poly_to_series(const MultiLaurent& poly, int v, ExpansionPoint point, int order);

// The identity function t as a series.
PolySeries identity_series(int arity, ExpansionPoint point, int order);
LaurentSeries identity_series_q(ExpansionPoint point, int order);

// Lift a Rational-coefficient series to MultiLaurent coefficients.
PolySeries lift_series(const LaurentSeries& s, int arity);

// Evaluate a MultiLaurent at per-variable assignments: each variable is
// either kept symbolic (target slot in the output arity) or substituted by
// a series. Substituted series must share point/zero arity.
struct VarAssign {
    // if series == nullptr: keep symbolic as output variable `target`
    const PolySeries* series = nullptr;
    int target = -1;
};
PolySeries substitute_vars(const MultiLaurent& poly, const std::vector<VarAssign>& assign,
                           int out_arity, ExpansionPoint point, int order);

}  // namespace spectral
