#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spectral/newton.hpp"
#include "spectral/series.hpp"

using namespace spectral;

namespace {
LaurentSeries geometric(ExpansionPoint pt, int order) {
    LaurentSeries s(pt, order, Rational(0));
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Rational(1));
    return s;
}
}  // namespace

TEST_CASE("series multiplication: geometric series times (1 - t)") {
    LaurentSeries g = geometric(ExpansionPoint::Zero, 12);
    LaurentSeries one_minus(ExpansionPoint::Zero, 12, Rational(0));
    one_minus.set_coeff(0, Rational(1));
    one_minus.set_coeff(1, Rational(-1));
    LaurentSeries p = g * one_minus;
    CHECK(p.coeff(0) == Rational(1));
    for (int k = 1; k <= p.order(); ++k) CHECK(p.coeff(k).is_zero());
}

TEST_CASE("series reciprocal: the odd-harmonic series") {
    // 1/(1 + t^2/3 + t^4/5 + ...) = 1 - t^2/3 - 4/45 t^4 - 44/945 t^6 - ...
    const int N = 14;
    LaurentSeries f(ExpansionPoint::Zero, N, Rational(0));
    for (int k = 0; 2 * k <= N; ++k) f.set_coeff(2 * k, Rational(1, 2 * k + 1));
    LaurentSeries r = f.reciprocal();
    CHECK(r.coeff(0) == Rational(1));
    CHECK(r.coeff(2) == Rational(-1, 3));
    CHECK(r.coeff(4) == Rational(-4, 45));
    CHECK(r.coeff(6) == Rational(-44, 945));
    CHECK(r.coeff(8) == Rational(-428, 14175));
    CHECK(r.coeff(10) == Rational(-10196, 467775));
    // multiply-back check to the truncation order
    LaurentSeries prod = r * f;
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = 1; k <= prod.order(); ++k) CHECK(prod.coeff(k).is_zero());
}

TEST_CASE("reciprocal of a shifted series keeps Laurent bookkeeping") {
    // f = t^2 (2 + t): 1/f = 1/(2 t^2) - 1/(4 t) + ...
    LaurentSeries f(ExpansionPoint::Zero, 10, Rational(0));
    f.set_coeff(2, Rational(2));
    f.set_coeff(3, Rational(1));
    LaurentSeries r = f.reciprocal();
    CHECK(r.valuation() == -2);
    CHECK(r.coeff(-2) == Rational(1, 2));
    CHECK(r.coeff(-1) == Rational(-1, 4));
    CHECK_THROWS_AS(LaurentSeries(ExpansionPoint::Zero, 5, Rational(0)).reciprocal(),
                    NotInvertible);
}

TEST_CASE("residue accessor and truncation guard") {
    LaurentSeries f(ExpansionPoint::Zero, 3, Rational(0));
    f.set_coeff(-1, Rational(1));
    CHECK(f.residue() == Rational(1));
    LaurentSeries g(ExpansionPoint::Zero, 3, Rational(0));
    g.set_coeff(2, Rational(1));
    CHECK(g.residue().is_zero());
    LaurentSeries inf(ExpansionPoint::Infinity, 4, Rational(0));
    inf.set_coeff(1, Rational(7));  // t^{-1}
    CHECK(inf.residue() == Rational(7));
    LaurentSeries thin(ExpansionPoint::Infinity, 0, Rational(0));
    CHECK_THROWS_AS(thin.residue(), TruncationError);
    CHECK_THROWS_AS(f.coeff(17), TruncationError);
}

TEST_CASE("derivative in t at both points") {
    LaurentSeries f(ExpansionPoint::Infinity, 8, Rational(0));
    f.set_coeff(-1, Rational(1));  // t
    f.set_coeff(2, Rational(5));   // 5 t^{-2}
    LaurentSeries d = f.derivative_t();
    CHECK(d.coeff(0) == Rational(1));
    CHECK(d.coeff(3) == Rational(-10));
}

TEST_CASE("newton: Catalan series from the quadratic") {
    LaurentSeries z = catalan_series_newton(13);
    LaurentSeries direct = catalan_series_direct(13);
    for (int k = 0; k <= 13; ++k) CHECK(z.coeff(k) == direct.coeff(k));
    CHECK(z.coeff(1) == Rational(1));
    CHECK(z.coeff(7) == Rational(5));
    CHECK(z.coeff(9) == Rational(14));
    CHECK(z.coeff(11) == Rational(42));
}

TEST_CASE("quadratic recursion of the Catalan numbers") {
    // C_{m+1} = sum_{i+j=m} C_i C_j
    for (long m = 0; m <= 9; ++m) {
        Rational sum(0);
        for (long i = 0; i <= m; ++i) sum += catalan(i) * catalan(m - i);
        CHECK(sum == catalan(m + 1));
    }
}

TEST_CASE("newton: tree function z = X e^z") {
    LaurentSeries z = tree_series(9);
    for (long m = 1; m <= 9; ++m)
        CHECK(z.coeff(static_cast<int>(m)) ==
              Rational(int_pow(mpz_class(m), m - 1), factorial(m)));
    // residual check: z - X e^z vanishes to the order
    LaurentSeries X = identity_series_q(ExpansionPoint::Zero, 9);
    LaurentSeries resid = z - X * series_exp(z);
    CHECK(resid.is_zero());
}

TEST_CASE("newton: deck transformation of the Lambert curve") {
    LaurentSeries s = deck_series(8);
    CHECK(s.coeff(-1) == Rational(-1));
    CHECK(s.coeff(0) == Rational(2, 3));
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2) == Rational(4, 135));
    CHECK(s.coeff(3) == Rational(8, 405));
    CHECK(s.coeff(4) == Rational(8, 567));
    // trivial branch
    LaurentSeries id = deck_series(8, true);
    CHECK(id.coeff(-1) == Rational(1));
    for (int k = 0; k <= 8; ++k) CHECK(id.coeff(k).is_zero());
}

TEST_CASE("deck transformation is an involution") {
    const int N = 12;
    LaurentSeries s = deck_series(N);
    LaurentSeries ss = series_compose(s, s);
    CHECK(ss.coeff(-1) == Rational(1));
    for (int k = 0; k <= std::min(10, ss.order()); ++k) CHECK(ss.coeff(k).is_zero());
}

TEST_CASE("deck residual satisfies the functional equation") {
    const int N = 10;
    LaurentSeries s = deck_series(N);
    LaurentSeries w = lambert_w_series(N + 2);
    LaurentSeries resid = series_compose(w, s) - w;
    CHECK((resid.is_zero() || resid.valuation() > N));
}

TEST_CASE("newton doubles the verified order") {
    // Track residual valuations along a manual iteration for the Catalan
    // quadratic; each step should at least double the valuation.
    const int N = 40;
    LaurentSeries x = identity_series_q(ExpansionPoint::Infinity, N + 2);
    LaurentSeries one(ExpansionPoint::Infinity, N + 2, Rational(0));
    one.set_coeff(0, Rational(1));
    LaurentSeries z(ExpansionPoint::Infinity, N, Rational(0));
    z.set_coeff(1, Rational(1));
    int prev = 0;
    for (int it = 0; it < 5; ++it) {
        LaurentSeries r = z * z - x * z + one;
        if (r.is_zero()) break;
        int v = r.valuation();
        CHECK(v >= 2 * prev);
        prev = v;
        z = z - r * (z.scale(Rational(2)) - x).reciprocal();
    }
    CHECK(prev >= 16);
}

TEST_CASE("series compose substitutes powers") {
    // f(u) = u + u^2 at zero composed with g = 2t gives 2t + 4t^2
    LaurentSeries f(ExpansionPoint::Zero, 6, Rational(0));
    f.set_coeff(1, Rational(1));
    f.set_coeff(2, Rational(1));
    LaurentSeries g(ExpansionPoint::Zero, 6, Rational(0));
    g.set_coeff(1, Rational(2));
    LaurentSeries h = series_compose(f, g);
    CHECK(h.coeff(1) == Rational(2));
    CHECK(h.coeff(2) == Rational(4));
}
