#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "betasum/combinatorics.hpp"
#include "betasum/series.hpp"

using namespace betasum;

namespace {

Series random_series(std::mt19937_64& rng, unsigned order) {
    std::vector<Rational> c(order + 1);
    for (auto& x : c) {
        x = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    }
    return Series(std::move(c));
}

/// Literal route for the xr operator: write the truncated series as a
/// polynomial in x, multiply by x^r, differentiate r times, reread the
/// coefficients. Independent of the closed-form scaling it checks.
Series xr_by_differentiation(const Series& s, unsigned r) {
    const unsigned ord = s.order();
    std::vector<Rational> poly(ord + r + 1, Rational(0));  // coefficients of x^r * s
    for (unsigned n = 0; n <= ord; ++n) {
        poly[n + r] = s.coefficient(n);
    }
    for (unsigned pass = 0; pass < r; ++pass) {
        std::vector<Rational> d(poly.size() - 1, Rational(0));
        for (std::size_t e = 1; e < poly.size(); ++e) {
            d[e - 1] = Rational(static_cast<long>(e)) * poly[e];
        }
        poly = std::move(d);
    }
    poly.resize(ord + 1);
    return Series(std::move(poly));
}

}  // namespace

TEST_CASE("constructors") {
    CHECK(Series::geometric(Rational(1), 3) ==
          Series({Rational(1), Rational(1), Rational(1), Rational(1)}));
    CHECK(Series::geometric(Rational(2), 3) == Series({Rational(1), Rational(2), Rational(4), Rational(8)}));
    CHECK(Series::geometric(Rational(-1, 2), 2) == Series({Rational(1), Rational(-1, 2), Rational(1, 4)}));
    CHECK(Series::neg_log_one_minus(Rational(1), 3) ==
          Series({Rational(0), Rational(1), Rational(1, 2), Rational(1, 3)}));
    CHECK(Series::neg_log_one_minus(Rational(2), 2) == Series({Rational(0), Rational(2), Rational(2)}));
    CHECK(Series::neg_log_one_minus(Rational(0), 4) == Series::zero(4));
    CHECK(Series::neg_log_one_minus(Rational(1), 5).coefficient(4) == Rational(1, 4));
    CHECK_THROWS_AS(Series({}), std::invalid_argument);
}

TEST_CASE("coefficient access past the truncation order is an error, not zero") {
    const Series s = Series::geometric(Rational(2), 5);
    CHECK(s.coefficient(3) == Rational(8));
    CHECK(s.coefficient(5) == Rational(32));
    CHECK_THROWS_AS(s.coefficient(6), std::out_of_range);
}

TEST_CASE("multiplication truncates to the minimum order") {
    const Series a({Rational(1), Rational(1)});
    CHECK(a * a == Series({Rational(1), Rational(2)}));
    CHECK((Series::geometric(Rational(1), 5) * Series::geometric(Rational(1), 5)) ==
          Series({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)}));

    Series one = Series::zero(7);
    one = one + Series({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                        Rational(0), Rational(0)});
    const Series s = Series::geometric(Rational(3, 2), 7);
    CHECK(s * one == s);

    const Series low = Series::geometric(Rational(1), 2);
    const Series high = Series::geometric(Rational(1), 9);
    CHECK((low * high).order() == 2);
    CHECK((low + high).order() == 2);
    CHECK((low - high).order() == 2);
}

TEST_CASE("the xr coefficient scaling") {
    const Series s({Rational(1), Rational(1), Rational(1)});
    CHECK(s.xr_derivative(0) == s);
    CHECK(s.xr_derivative(1) == Series({Rational(1), Rational(2), Rational(3)}));
    const Series t({Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(t.xr_derivative(2).coefficient(3) == Rational(20));  // 5!/3!
}

TEST_CASE("mu and nu operators") {
    CHECK(Series({Rational(1), Rational(1), Rational(1), Rational(1)}).mu() ==
          Series({Rational(1), Rational(2), Rational(3), Rational(4)}));
    const Series only_c0({Rational(1), Rational(0), Rational(0)});
    CHECK(only_c0.mu().mu() == only_c0);
    CHECK(Series({Rational(0), Rational(0), Rational(1)}).mu().mu() ==
          Series({Rational(0), Rational(0), Rational(9)}));

    const Series s({Rational(0), Rational(1)});
    CHECK(s.nu(1) == s);
    CHECK(s.nu(2) == s.mu());
    CHECK(s.nu(3) == Series({Rational(0), Rational(6)}));  // (1+2)!/1!
    CHECK_THROWS_AS(s.nu(0), std::invalid_argument);
}

TEST_CASE("xr scaling agrees with literal differentiation of x^r f") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        const unsigned order = static_cast<unsigned>(rng() % 21);
        const Series s = random_series(rng, order);
        for (unsigned r = 0; r <= 4; ++r) {
            CHECK(s.xr_derivative(r) == xr_by_differentiation(s, r));
        }
        CHECK(s.mu() == s.xr_derivative(1));
        for (unsigned d = 1; d <= 4; ++d) {
            CHECK(s.nu(d) == s.xr_derivative(d - 1));
        }
    }
}

TEST_CASE("multiplication is commutative and associative up to common order") {
    std::mt19937_64 rng(515151);
    for (int i = 0; i < 1000; ++i) {
        const Series a = random_series(rng, static_cast<unsigned>(rng() % 9));
        const Series b = random_series(rng, static_cast<unsigned>(rng() % 9));
        const Series c = random_series(rng, static_cast<unsigned>(rng() % 9));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("geometric products have the Cauchy power-sum coefficients") {
    const Rational a(2, 3);
    const Rational b(-3, 2);
    const Series prod = Series::geometric(a, 30) * Series::geometric(b, 30);
    for (unsigned n = 0; n <= 30; ++n) {
        Rational expect(0);
        for (unsigned k = 0; k <= n; ++k) {
            expect += a.pow(k) * b.pow(static_cast<long>(n - k));
        }
        CHECK(prod.coefficient(n) == expect);
    }
}
