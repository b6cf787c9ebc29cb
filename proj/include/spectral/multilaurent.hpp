#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectral/rational.hpp"

namespace spectral {

using Exp = std::vector<int>;

// Sparse multivariate Laurent polynomial over Rational in variables
// t_1..t_n (index 0..n-1). Terms are kept in lexicographic exponent order,
// zero coefficients are never stored, so equality is map equality and
// serialization is deterministic.
class MultiLaurent {
public:
    explicit MultiLaurent(int arity = 0) : arity_(arity) {}

    static MultiLaurent constant(int arity, const Rational& c);
    static MultiLaurent monomial(int arity, const Exp& e, const Rational& c);
    // The variable t_{var+1}: exponent 1 on `var`.
    static MultiLaurent var(int arity, int v, int exponent = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    Rational coeff(const Exp& e) const;
    // Constant term shortcut; for arity 0 this is the value itself.
    Rational constant_term() const { return coeff(Exp(arity_, 0)); }

    void add_term(const Exp& e, const Rational& c);

    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    MultiLaurent& operator-=(const MultiLaurent& o);
    friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
    friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiLaurent& a, const MultiLaurent& b) { return !(a == b); }
    friend bool operator<(const MultiLaurent& a, const MultiLaurent& b);

    MultiLaurent scale(const Rational& c) const;
    MultiLaurent pow(int e) const;  // e >= 0

    // Inverse of a single-term polynomial; NotInvertible otherwise.
    MultiLaurent invert() const;

    // d/dt_var, term-wise.
    MultiLaurent derivative(int v) const;

    // Antiderivative in t_var vanishing at t_var = basepoint.
    // Throws LogarithmicObstruction on a nonzero t_var^{-1} coefficient.
    MultiLaurent antiderivative_from(int v, const Rational& basepoint) const;

    // t_var -> -t_var and t_var -> 1/t_var.
    MultiLaurent substitute_sign(int v) const;
    MultiLaurent substitute_inverse(int v) const;

    // Substitute t_var = value; arity is preserved, var no longer occurs.
    MultiLaurent eval_var(int v, const Rational& value) const;
    // Full evaluation at a point.
    Rational eval(const std::vector<Rational>& point) const;

    // Reinterpret in `new_arity` variables, variable i becoming variable
    // var_map[i]. Repeats are allowed (exponents add), so this also
    // implements diagonal substitutions like w(t1,t1,t2,...).
    MultiLaurent embed(int new_arity, const std::vector<int>& var_map) const;

    // Multiply by the monomial with exponent vector e (always exact).
    MultiLaurent shift(const Exp& e) const;

    // max over terms of sum_i |e_i|  (0 for the zero polynomial)
    int degree_abs() const;
    // max over terms of sum_i e_i   (0 for the zero polynomial)
    int degree_max() const;
    // Terms of top total degree sum_i e_i.
    MultiLaurent top_homogeneous() const;

    int min_exponent(int v) const;  // 0 for the zero polynomial
    int max_exponent(int v) const;

    bool has_negative_exponent() const;
    bool all_exponents_even() const;
    bool is_symmetric() const;

    std::string str() const;  // deterministic, for messages and debugging

private:
    int arity_;
    std::map<Exp, Rational> terms_;

    void check_arity(const MultiLaurent& o) const {
        if (arity_ != o.arity_) throw UsageError("MultiLaurent: arity mismatch");
    }
};

// Exact division with a polynomial divisor (all exponents >= 0).
// The dividend may be Laurent: its negative exponents are lifted by a
// monomial first, so divisibility is tested in the polynomial ring.
// Throws InexactDivision when no quotient exists.
MultiLaurent divide_exact(const MultiLaurent& num, const MultiLaurent& den);

}  // namespace spectral
