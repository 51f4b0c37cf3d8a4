#include "betasum/integrate.hpp"

#include <stdexcept>
#include <string>

namespace betasum {

SimplexSpec::SimplexSpec(unsigned d, std::vector<unsigned> alpha) : dimension(d), exponents(std::move(alpha)) {
    if (dimension < 1) {
        throw std::invalid_argument("SimplexSpec: dimension must be >= 1");
    }
    if (exponents.size() != dimension) {
        throw std::invalid_argument("SimplexSpec: need one exponent per coordinate");
    }
}

unsigned SimplexSpec::total_degree() const {
    unsigned n = 0;
    for (unsigned a : exponents) {
        n += a;
    }
    return n;
}

Rational integrate_interval(const Poly& p, const Rational& u1, const Rational& u2) {
    if (p.var_count() != 1) {
        throw std::invalid_argument("integrate_interval: polynomial must be univariate");
    }
    const Poly f = p.antiderivative(0);
    return f.eval({u2}) - f.eval({u1});
}

Rational integrate_box(const Poly& p, const std::vector<std::pair<Rational, Rational>>& bounds) {
    if (bounds.size() != p.var_count()) {
        throw std::invalid_argument("integrate_box: one bound pair per variable required");
    }
    Poly cur = p;
    for (std::size_t v = 0; v < bounds.size(); ++v) {
        const Poly f = cur.antiderivative(v);
        const Poly hi = Poly::constant(p.vars(), bounds[v].second);
        const Poly lo = Poly::constant(p.vars(), bounds[v].first);
        cur = f.substitute(v, hi) - f.substitute(v, lo);
    }
    return cur.constant_value();
}

Rational integrate_prob_simplex(const SimplexSpec& spec) {
    const unsigned d = spec.dimension;
    if (d == 1) {
        // zero integration variables; the surviving factor is 1^alpha_1
        return Rational(1);
    }
    std::vector<std::string> vars;
    vars.reserve(d - 1);
    for (unsigned i = 0; i + 1 < d; ++i) {
        vars.push_back("x" + std::to_string(i + 1));
    }

    // integrand: prod_{i<d} x_i^alpha_i * (1 - sum x_i)^alpha_d
    Poly last = Poly::constant(vars, Rational(1));
    for (unsigned i = 0; i + 1 < d; ++i) {
        last -= Poly::variable(vars, i);
    }
    Poly integrand = last.pow(spec.exponents[d - 1]);
    for (unsigned i = 0; i + 1 < d; ++i) {
        Poly::Exponents e(vars.size(), 0);
        e[i] = spec.exponents[i];
        integrand = integrand * Poly::monomial(vars, std::move(e), Rational(1));
    }

    // integrate innermost first: x_v runs over [0, 1 - x_1 - ... - x_{v-1}]
    for (std::size_t v = vars.size(); v-- > 0;) {
        const Poly f = integrand.antiderivative(v);
        Poly upper = Poly::constant(vars, Rational(1));
        for (std::size_t i = 0; i < v; ++i) {
            upper -= Poly::variable(vars, i);
        }
        const Poly zero = Poly::constant(vars, Rational(0));
        integrand = f.substitute(v, upper) - f.substitute(v, zero);
    }
    return integrand.constant_value();
}

PiPower wallis(unsigned p) {
    PiPower even = PiPower::half_power(2, Rational(1, 2));  // W(0) = pi/2
    PiPower odd = PiPower(Rational(1));                     // W(1) = 1
    if (p == 0) {
        return even;
    }
    if (p == 1) {
        return odd;
    }
    PiPower& chain = (p % 2 == 0) ? even : odd;
    for (unsigned j = (p % 2 == 0) ? 2 : 3; j <= p; j += 2) {
        chain = chain * Rational(static_cast<long>(j) - 1, static_cast<long>(j));
    }
    return chain;
}

}  // namespace betasum
