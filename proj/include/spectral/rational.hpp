#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "spectral/errors.hpp"

namespace spectral {

// Exact rational scalar. Thin value wrapper over GMP's mpq_class that
// guarantees canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw UsageError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw UsageError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or "p".
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw UsageError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational invert() const {
        if (is_zero()) throw NotInvertible("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const;

    // Canonical text form, e.g. "-3/4", "7", "0".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

// Integer combinatorics helpers used throughout the engines.
mpz_class factorial(long n);
mpz_class binomial(long n, long k);      // 0 for k < 0 or k > n (n >= 0)
mpz_class double_factorial(long n);      // n!!, with (-1)!! = 1
mpz_class int_pow(const mpz_class& b, long e);
Rational catalan(long m);                // C_m = binom(2m,m)/(m+1)

// binom(n,k) for possibly negative integer n, as the falling-factorial
// polynomial n(n-1)...(n-k+1)/k!.
Rational binomial_poly(long n, long k);

}  // namespace spectral
