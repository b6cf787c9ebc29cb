#include "spectral/rational.hpp"

namespace spectral {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw UsageError("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("Rational::parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw UsageError("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : invert();
    long k = e > 0 ? e : -e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

mpz_class factorial(long n) {
    if (n < 0) throw UsageError("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class double_factorial(long n) {
    if (n == -1 || n == 0) return 1;
    if (n < -1) throw UsageError("double_factorial below -1");
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class int_pow(const mpz_class& b, long e) {
    if (e < 0) throw UsageError("int_pow: negative exponent");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational catalan(long m) {
    return Rational(binomial(2 * m, m), mpz_class(m + 1));
}

Rational binomial_poly(long n, long k) {
    if (k < 0) return Rational(0);
    mpz_class num = 1;
    for (long i = 0; i < k; ++i) num *= mpz_class(n - i);
    return Rational(num, factorial(k));
}

}  // namespace spectral
