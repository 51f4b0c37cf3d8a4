#ifndef BETASUM_INTEGRATE_HPP
#define BETASUM_INTEGRATE_HPP

#include <utility>
#include <vector>

#include "betasum/pi_power.hpp"
#include "betasum/poly.hpp"
#include "betasum/rational.hpp"

namespace betasum {

/// The (d-1)-dimensional probability simplex with a monomial exponent per
/// coordinate: integrand x_1^a1 ... x_d^ad over {x_i >= 0, sum x_i = 1},
/// with x_d eliminated as 1 - x_1 - ... - x_{d-1}.
struct SimplexSpec {
    unsigned dimension;
    std::vector<unsigned> exponents;

    SimplexSpec(unsigned d, std::vector<unsigned> alpha);
    unsigned total_degree() const;
};

/// Exact definite integral of a univariate polynomial over [u1, u2].
Rational integrate_interval(const Poly& p, const Rational& u1, const Rational& u2);

/// Exact iterated integral over a box; bounds[i] pairs with variable i.
Rational integrate_box(const Poly& p, const std::vector<std::pair<Rational, Rational>>& bounds);

/// Exact integral of the simplex monomial, by iterated integration with
/// polynomial upper bounds. Equals prod(alpha_i!) / (n + d - 1)! where
/// n = sum(alpha); the closed form is checked against this routine in tests.
Rational integrate_prob_simplex(const SimplexSpec& spec);

/// Exact Wallis integral of sin^p over [0, pi/2]:
/// W(0) = pi/2, W(1) = 1, W(p) = (p-1)/p * W(p-2).
PiPower wallis(unsigned p);

}  // namespace betasum

#endif
