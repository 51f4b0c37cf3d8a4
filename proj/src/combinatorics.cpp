#include "betasum/combinatorics.hpp"

#include <stdexcept>

namespace betasum {

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f), 1);
}

Rational binomial(unsigned long n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(std::move(b), 1);
}

Rational multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
    unsigned long long sum = 0;
    for (unsigned long p : parts) {
        sum += p;
    }
    if (sum != n) {
        throw std::invalid_argument("multinomial: parts must sum to n");
    }
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpz_class den(1);
    for (unsigned long p : parts) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), p);
        den *= f;
    }
    // den divides num exactly
    return Rational(std::move(num), std::move(den));
}

Rational rise_factor(unsigned long n, unsigned long r) {
    mpz_class acc(1);
    for (unsigned long j = 1; j <= r; ++j) {
        acc *= mpz_class(n + j);
    }
    return Rational(std::move(acc), 1);
}

PiPower gamma_half(unsigned long two_x) {
    if (two_x == 0) {
        throw std::domain_error("gamma_half: argument must be >= 1/2");
    }
    if (two_x % 2 == 0) {
        // Gamma(m) = (m-1)!
        return PiPower(factorial(two_x / 2 - 1));
    }
    // Gamma(m + 1/2) = (1/2)(3/2)...(m - 1/2) * Gamma(1/2), Gamma(1/2) = sqrt(pi)
    Rational coef(1);
    for (unsigned long j = 1; j < two_x; j += 2) {
        coef *= Rational(static_cast<long>(j), 2);
    }
    return PiPower::half_power(1, coef);
}

}  // namespace betasum
