#pragma once

#include "spectral/multilaurent.hpp"

namespace spectral {

// Numerator/denominator pair used as the intermediate carrier when a
// recursion combines terms whose poles must cancel. Denominators are
// restricted to products of factors of the shape (ti^2 - tj^2), (ti +- tj)
// and ti^k; no general gcd reduction is attempted. to_laurent() succeeds
// exactly when the denominator divides the numerator.
class RationalFunction {
public:
    explicit RationalFunction(MultiLaurent num)
        : num_(std::move(num)), den_(MultiLaurent::constant(num_.arity(), Rational(1))) {}
    RationalFunction(MultiLaurent num, MultiLaurent den);

    const MultiLaurent& num() const { return num_; }
    const MultiLaurent& den() const { return den_; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    // Exact reduction to a Laurent polynomial. The denominator's monomial
    // content is split off first (monomials are units of the Laurent ring);
    // what remains must divide the numerator or InexactDivision is thrown.
    MultiLaurent to_laurent() const;

private:
    MultiLaurent num_, den_;
};

}  // namespace spectral
