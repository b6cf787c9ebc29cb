#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spectral/multilaurent.hpp"
#include "spectral/rational.hpp"
#include "spectral/rational_function.hpp"

using namespace spectral;

namespace {
MultiLaurent t(int arity, int v, int e = 1) { return MultiLaurent::var(arity, v, e); }
MultiLaurent cst(int arity, long n, long d = 1) {
    return MultiLaurent::constant(arity, Rational(n, d));
}
}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-3, 9)).str() == "-1/3");
    CHECK(Rational(6, -4).str() == "-3/2");  // denominator normalized positive
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(3, 4).pow(-2) == Rational(16, 9));
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(catalan(0) == Rational(1));
    CHECK(catalan(5) == Rational(42));
    CHECK(binomial_poly(-1, 2) == Rational(1));   // (-1)(-2)/2
    CHECK(binomial_poly(-1, 1) == Rational(-1));
}

TEST_CASE("ring arithmetic: difference of squares") {
    // (t + 1/t)(t - 1/t) = t^2 - 1/t^2
    MultiLaurent a = t(1, 0) + t(1, 0, -1);
    MultiLaurent b = t(1, 0) - t(1, 0, -1);
    CHECK(a * b == t(1, 0, 2) - t(1, 0, -2));
}

TEST_CASE("ring arithmetic: additive identity") {
    MultiLaurent p = t(2, 0, 3) * t(2, 1, -2) + cst(2, 5, 7);
    CHECK(p + MultiLaurent(2) == p);
}

TEST_CASE("ring arithmetic: (z + 1/z)^2 - 2 expands to z^2 + 1/z^2") {
    MultiLaurent z = t(1, 0), zi = t(1, 0, -1);
    MultiLaurent lhs = (z + zi) * (z + zi) - cst(1, 2);
    // oracle: term-by-term multiplication
    MultiLaurent oracle(1);
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) oracle += MultiLaurent::monomial(1, {e1 + e2}, Rational(1));
    oracle -= cst(1, 2);
    CHECK(lhs == oracle);
    CHECK(lhs == t(1, 0, 2) + t(1, 0, -2));
}

TEST_CASE("derivative basics") {
    CHECK(t(1, 0, 3).derivative(0) == t(1, 0, 2).scale(Rational(3)));
    CHECK(t(1, 0, -1).derivative(0) == t(1, 0, -2).scale(Rational(-1)));
    // d/dt [(1/24)(t^2-1)(t-1)] = (1/24)(3t^2 - 2t - 1)
    MultiLaurent f = ((t(1, 0, 2) - cst(1, 1)) * (t(1, 0) - cst(1, 1))).scale(Rational(1, 24));
    MultiLaurent expect =
        (t(1, 0, 2).scale(Rational(3)) - t(1, 0).scale(Rational(2)) - cst(1, 1))
            .scale(Rational(1, 24));
    CHECK(f.derivative(0) == expect);
}

TEST_CASE("antiderivative from a basepoint") {
    // int_{-1}^{t} 3u^2 du = t^3 + 1
    MultiLaurent f = t(1, 0, 2).scale(Rational(3));
    CHECK(f.antiderivative_from(0, Rational(-1)) == t(1, 0, 3) + cst(1, 1));
    // int_{-1}^{t} u^{-2} du = -1/t - 1
    MultiLaurent g = t(1, 0, -2);
    CHECK(g.antiderivative_from(0, Rational(-1)) == -t(1, 0, -1) - cst(1, 1));
    // u^{-1} is a logarithm
    CHECK_THROWS_AS(t(1, 0, -1).antiderivative_from(0, Rational(-1)), LogarithmicObstruction);
    // derivative o antiderivative = identity; vanishing at the basepoint
    MultiLaurent p = t(2, 0, 4).scale(Rational(7, 3)) + t(2, 0, -3) * t(2, 1, 2);
    MultiLaurent prim = p.antiderivative_from(0, Rational(-1));
    CHECK(prim.derivative(0) == p);
    CHECK(prim.eval_var(0, Rational(-1)).is_zero());
}

TEST_CASE("substitutions") {
    MultiLaurent p = t(1, 0, 2) + t(1, 0);
    CHECK(p.substitute_sign(0) == t(1, 0, 2) - t(1, 0));
    CHECK(t(1, 0, 3).substitute_inverse(0) == t(1, 0, -3));
    MultiLaurent q = t(2, 0, 2) * t(2, 1, -5);
    CHECK(q.substitute_inverse(0).substitute_inverse(0) == q);
    CHECK(q.substitute_sign(0).substitute_sign(0) == q);
}

TEST_CASE("divide_exact") {
    MultiLaurent num = t(2, 0, 2) - t(2, 1, 2);
    MultiLaurent den = t(2, 0) - t(2, 1);
    CHECK(divide_exact(num, den) == t(2, 0) + t(2, 1));
    CHECK_THROWS_AS(divide_exact(t(2, 0), t(2, 1)), InexactDivision);
    // Laurent dividend, polynomial quotient check Q * den = num
    MultiLaurent p = t(2, 0, -3) * t(2, 1, 2) + cst(2, 4) + t(2, 1, -1);
    MultiLaurent d2 = t(2, 0, 2) - t(2, 1, 2);
    MultiLaurent q = divide_exact(p * d2, d2);
    CHECK(q == p);
    CHECK(q * d2 == p * d2);
}

TEST_CASE("divide_exact property on random-ish products") {
    MultiLaurent p(3);
    p += t(3, 0, 2) * t(3, 1, -1);
    p += t(3, 2, 3).scale(Rational(5, 2));
    p -= cst(3, 1, 3);
    MultiLaurent d = t(3, 0) + t(3, 1) + cst(3, 2);
    CHECK(divide_exact(p * d, d) == p);
}

TEST_CASE("rational function pole cancellation") {
    // (t1^4 P - t2^4 P(t2)) / (t1^2 - t2^2) with P symmetric-even is exact
    MultiLaurent P1 = t(2, 0, 2) + cst(2, 1);
    MultiLaurent P2 = t(2, 1, 2) + cst(2, 1);
    MultiLaurent num = t(2, 0, 4) * P1 - t(2, 1, 4) * P2;
    RationalFunction rf(num, t(2, 0, 2) - t(2, 1, 2));
    MultiLaurent q = rf.to_laurent();
    CHECK(q * (t(2, 0, 2) - t(2, 1, 2)) == num);
}

TEST_CASE("rational function arithmetic with monomial denominators") {
    // (t^2-1)^3 / t^2: the monomial denominator is a unit
    MultiLaurent numer = (t(1, 0, 2) - cst(1, 1)).pow(3);
    RationalFunction rf(numer, t(1, 0, 2));
    CHECK(rf.to_laurent() == numer.shift({-2}));
    // a/b + c/d assembles over a common denominator
    RationalFunction sum = RationalFunction(cst(1, 1), t(1, 0)) +
                           RationalFunction(cst(1, 1), t(1, 0, 2));
    CHECK(sum.to_laurent() == t(1, 0, -1) + t(1, 0, -2));
}

TEST_CASE("embed and symmetry utilities") {
    MultiLaurent w = t(2, 0, 2) * t(2, 1, 4);
    CHECK(w.embed(1, {0, 0}) == t(1, 0, 6));
    MultiLaurent sym = t(2, 0) * t(2, 1) + t(2, 0, 2) + t(2, 1, 2);
    CHECK(sym.is_symmetric());
    CHECK(!(t(2, 0, 2) + t(2, 1)).is_symmetric());
    CHECK(w.degree_abs() == 6);
    CHECK((t(1, 0, 2) + t(1, 0, -4)).degree_abs() == 4);
    CHECK((t(1, 0, 2) + t(1, 0, -4)).degree_max() == 2);
    CHECK((t(2, 0, 3) * t(2, 1, 2) + t(2, 0)).top_homogeneous() == t(2, 0, 3) * t(2, 1, 2));
}

TEST_CASE("deterministic serialization order") {
    MultiLaurent a(2), b(2);
    a += t(2, 0, 2);
    a += t(2, 1, -1);
    b += t(2, 1, -1);
    b += t(2, 0, 2);
    CHECK(a.str() == b.str());
}
