#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spectral/oracles.hpp"

using namespace spectral;

TEST_CASE("dessin oracle: one-vertex counts are Catalan") {
    CHECK(dessin_brute(0, {2}) == Rational(1, 2));
    CHECK(dessin_brute(0, {4}) == Rational(1, 2));   // C_2/4
    CHECK(dessin_brute(0, {6}) == Rational(5, 6));   // C_3/6
    CHECK(dessin_brute(0, {8}) == Rational(14, 8));  // C_4/8
}

TEST_CASE("dessin oracle: genus one loop") {
    CHECK(dessin_brute(1, {4}) == Rational(1, 4));
    CHECK(dessin_brute(1, {2}).is_zero());
}

TEST_CASE("dessin oracle: two-vertex values match Kodama-Pierce") {
    CHECK(dessin_brute(0, {1, 1}) == Rational(1));
    CHECK(dessin_brute(0, {2, 2}) == Rational(1, 2));
    CHECK(dessin_brute(0, {3, 3}) == Rational(4, 3));
    CHECK(dessin_brute(0, {3, 1}) == Rational(1));
    CHECK(dessin_brute(0, {1, 2}).is_zero());
}

TEST_CASE("dessin oracle: odd total weight vanishes") {
    CHECK(dessin_brute(0, {1, 1, 1}).is_zero());
    CHECK(dessin_brute(0, {3, 2, 2}).is_zero());
    CHECK(dessin_brute(1, {5}).is_zero());
}

TEST_CASE("dessin oracle respects its budget") {
    CHECK_THROWS_AS(dessin_brute(0, {14}), Unsupported);
}

TEST_CASE("dessin oracle work splitting reduces to the serial count") {
    CHECK(dessin_brute(1, {4, 2}, 4) == dessin_brute(1, {4, 2}, 1));
    CHECK(dessin_brute(0, {3, 3, 2}, 3) == dessin_brute(0, {3, 3, 2}));
}

TEST_CASE("hurwitz oracle: unstable anchors") {
    CHECK(hurwitz_brute(0, {1}) == Rational(1));
    CHECK(hurwitz_brute(0, {2}) == Rational(1, 2));
    CHECK(hurwitz_brute(0, {1, 1}) == Rational(1, 2));
}

TEST_CASE("hurwitz oracle: classical small values") {
    CHECK(hurwitz_brute(1, {2}) == Rational(1, 12));
    CHECK(hurwitz_brute(0, {3}) == Rational(1, 2));   // 3^1/3!
    CHECK(hurwitz_brute(0, {4}) == Rational(2, 3));   // 4^2/4!
    CHECK(hurwitz_brute(1, {1}).is_zero());
}

TEST_CASE("hurwitz oracle budget") {
    CHECK_THROWS_AS(hurwitz_brute(0, {6}), Unsupported);
    CHECK(hurwitz_brute(3, {2}) == Rational(mpz_class(1), mpz_class(10080)));  // r = 7, single tuple
    CHECK_THROWS_AS(hurwitz_brute(3, {3}), Unsupported);  // r = 8
}

TEST_CASE("hurwitz oracle work splitting reduces to the serial count") {
    CHECK(hurwitz_brute(1, {3}, 4) == hurwitz_brute(1, {3}));
    CHECK(hurwitz_brute(0, {2, 1}, 3) == hurwitz_brute(0, {2, 1}));
}
