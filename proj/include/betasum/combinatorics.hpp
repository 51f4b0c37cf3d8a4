#ifndef BETASUM_COMBINATORICS_HPP
#define BETASUM_COMBINATORICS_HPP

#include <vector>

#include "betasum/pi_power.hpp"
#include "betasum/rational.hpp"

namespace betasum {

/// n!
Rational factorial(unsigned long n);

/// n! / (k! (n-k)!) for 0 <= k <= n, zero for k outside that range.
Rational binomial(unsigned long n, long long k);

/// n! / prod(parts[i]!). Throws std::invalid_argument unless sum(parts) == n.
Rational multinomial(unsigned long n, const std::vector<unsigned long>& parts);

/// (n+r)!/n! = (n+1)(n+2)...(n+r)
Rational rise_factor(unsigned long n, unsigned long r);

/// Exact Gamma(two_x / 2) for two_x >= 1: an integer for integer arguments,
/// a rational multiple of sqrt(pi) for half-integer arguments.
PiPower gamma_half(unsigned long two_x);

}  // namespace betasum

#endif
