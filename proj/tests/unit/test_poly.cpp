#include <doctest.h>

#include <stdexcept>

#include "betasum/poly.hpp"

using namespace betasum;

namespace {
const std::vector<std::string> kTU{"t", "u"};
}

TEST_CASE("construction and term bookkeeping") {
    const Poly zero = Poly::constant({"t"}, Rational(0));
    CHECK(zero.is_zero());
    CHECK(zero.is_constant());
    CHECK(zero.constant_value() == Rational(0));

    const Poly p = Poly::univariate("t", {Rational(1), Rational(-2), Rational(0), Rational(3)});
    CHECK(p.terms().size() == 3);  // zero coefficient not stored
    CHECK(p.degree(0) == 3);
    CHECK_FALSE(p.is_constant());
    CHECK_THROWS_AS(p.constant_value(), std::logic_error);
}

TEST_CASE("arithmetic is exact and cancels cleanly") {
    const Poly t = Poly::variable({"t"}, 0);
    const Poly one = Poly::constant({"t"}, Rational(1));
    const Poly q = (one - t) * (one + t);
    CHECK(q == one - t * t);
    CHECK((q - q).is_zero());

    // t^2 (1-t)^2 = t^2 - 2 t^3 + t^4
    const Poly w = t.pow(2) * (one - t).pow(2);
    CHECK(w == Poly::univariate("t", {Rational(0), Rational(0), Rational(1), Rational(-2), Rational(1)}));
}

TEST_CASE("mixed-variable operands are rejected") {
    const Poly p = Poly::variable({"t"}, 0);
    const Poly q = Poly::variable(kTU, 0);
    CHECK_THROWS_AS(p + q, std::invalid_argument);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("evaluation") {
    const Poly t = Poly::variable(kTU, 0);
    const Poly u = Poly::variable(kTU, 1);
    const Poly p = t * t * u + Poly::constant(kTU, Rational(1, 2));
    CHECK(p.eval({Rational(2), Rational(3, 2)}) == Rational(2) * Rational(2) * Rational(3, 2) + Rational(1, 2));
    CHECK_THROWS_AS(p.eval({Rational(1)}), std::invalid_argument);
}

TEST_CASE("substitution replaces a variable by a polynomial") {
    const Poly t = Poly::variable(kTU, 0);
    const Poly u = Poly::variable(kTU, 1);
    const Poly one = Poly::constant(kTU, Rational(1));
    // t^2 + u with t := 1 - u becomes (1-u)^2 + u
    const Poly p = t.pow(2) + u;
    CHECK(p.substitute(0, one - u) == (one - u).pow(2) + u);
    // substituting a constant performs partial evaluation
    const Poly at_half = p.substitute(0, Poly::constant(kTU, Rational(1, 2)));
    CHECK(at_half == u + Poly::constant(kTU, Rational(1, 4)));
}

TEST_CASE("antiderivative applies the power rule term-wise") {
    const Poly t = Poly::variable({"t"}, 0);
    const Poly p = Poly::univariate("t", {Rational(3), Rational(0), Rational(6)});  // 3 + 6 t^2
    CHECK(p.antiderivative(0) == Poly::univariate("t", {Rational(0), Rational(3), Rational(0), Rational(2)}));
    CHECK(t.antiderivative(0) == Poly::univariate("t", {Rational(0), Rational(0), Rational(1, 2)}));
}
