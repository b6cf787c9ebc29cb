#include "spectral/rational_function.hpp"

namespace spectral {

RationalFunction::RationalFunction(MultiLaurent num, MultiLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("RationalFunction: zero denominator");
    if (num_.arity() != den_.arity()) throw UsageError("RationalFunction: arity mismatch");
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

MultiLaurent RationalFunction::to_laurent() const {
    const int n = num_.arity();
    Exp strip(n);
    for (int v = 0; v < n; ++v) strip[v] = -den_.min_exponent(v);
    MultiLaurent den_poly = den_.shift(strip);  // monomial content removed
    MultiLaurent q = divide_exact(num_, den_poly);
    return q.shift(strip);
}

}  // namespace spectral
