#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spectral/psi_dvv.hpp"

using namespace spectral;

TEST_CASE("tau seeds and classical values") {
    PsiEngine psi;
    CHECK(psi.tau(0, {0, 0, 0}) == Rational(1));
    CHECK(psi.tau(1, {1}) == Rational(1, 24));
    CHECK(psi.tau(0, {1, 0, 0, 0}) == Rational(1));
    CHECK(psi.tau(0, {2, 0, 0, 0, 0}) == Rational(1));
    CHECK(psi.tau(0, {1, 1, 0, 0, 0}) == Rational(2));
    CHECK(psi.tau(1, {0, 2}) == Rational(1, 24));
    CHECK(psi.tau(1, {1, 1}) == Rational(1, 24));
    CHECK(psi.tau(2, {4}) == Rational(1, 1152));
    CHECK(psi.tau(2, {4, 1}) == Rational(1, 384));
    CHECK(psi.tau(2, {3, 2}) == Rational(29, 5760));
    CHECK(psi.tau(3, {7}) == Rational(1, 82944));
}

TEST_CASE("tau vanishes off the dimension shell and on bad keys") {
    PsiEngine psi;
    CHECK(psi.tau(1, {2}).is_zero());
    CHECK(psi.tau(0, {0, 0}).is_zero());   // unstable
    CHECK(psi.tau(0, {5}).is_zero());      // unstable
    CHECK(psi.tau(2, {-1, 5}).is_zero());  // negative index
}

TEST_CASE("tau is permutation invariant") {
    PsiEngine psi;
    CHECK(psi.tau(1, {0, 1, 1, 2}) == psi.tau(1, {2, 1, 1, 0}));
    CHECK(psi.tau(1, {1, 0, 2, 1}) == psi.tau(1, {2, 1, 1, 0}));
}

TEST_CASE("string equation holds on computed values") {
    PsiEngine psi;
    // <tau_0 prod tau_{d_i}> = sum_j <tau_{d_j - 1} prod_{i != j} tau_{d_i}>
    auto check_string = [&](int g, std::vector<long> d) {
        std::vector<long> with0 = d;
        with0.push_back(0);
        Rational lhs = psi.tau(g, with0);
        Rational rhs(0);
        for (std::size_t j = 0; j < d.size(); ++j) {
            std::vector<long> rest;
            for (std::size_t i = 0; i < d.size(); ++i)
                rest.push_back(i == j ? d[i] - 1 : d[i]);
            rhs += psi.tau(g, rest);
        }
        CHECK(lhs == rhs);
    };
    check_string(0, {2, 1, 0});
    check_string(1, {2});
    check_string(1, {1, 1, 1});
    check_string(2, {5});
    check_string(2, {3, 2});
}

TEST_CASE("w^K seeds") {
    PsiEngine psi;
    CHECK(psi.wgnK(0, 3) == MultiLaurent::constant(3, Rational(1)));
    CHECK(psi.wgnK(1, 1) == MultiLaurent::var(1, 0, 2).scale(Rational(1, 8)));
}

TEST_CASE("w^K (0,4) has the string-equation shape") {
    PsiEngine psi;
    MultiLaurent w = psi.wgnK(0, 4);
    MultiLaurent expect(4);
    for (int i = 0; i < 4; ++i) expect += MultiLaurent::var(4, i, 2).scale(Rational(3));
    CHECK(w == expect);
}

TEST_CASE("equivalence of DVV and residue routes") {
    PsiEngine psi;
    for (auto [g, n] : std::vector<std::pair<int, int>>{
             {0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}, {0, 5}, {1, 3}, {2, 2}, {3, 1}, {0, 6}, {1, 4}})
        CHECK_MESSAGE(psi.equivalence_check(g, n), "(g,n)=(", g, ",", n, ")");
}

TEST_CASE("w^K invariants: positivity, evenness, symmetry, degree") {
    PsiEngine psi;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}, {1, 3}, {2, 2}}) {
        MultiLaurent w = psi.wgnK(g, n);
        CHECK(!w.has_negative_exponent());
        CHECK(w.all_exponents_even());
        CHECK(w.is_symmetric());
        CHECK(w.degree_max() == 2 * (3 * g - 3 + n));
        for (const auto& [e, c] : w.terms()) CHECK(c.sign() > 0);
    }
}
