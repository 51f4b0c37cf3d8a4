#include "betasum/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "betasum/combinatorics.hpp"

namespace betasum {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Series: at least the constant coefficient is required");
    }
}

Series Series::zero(unsigned order) {
    return Series(std::vector<Rational>(order + 1, Rational(0)));
}

Series Series::geometric(const Rational& c, unsigned order) {
    std::vector<Rational> v(order + 1);
    v[0] = Rational(1);
    for (unsigned n = 1; n <= order; ++n) {
        v[n] = v[n - 1] * c;
    }
    return Series(std::move(v));
}

Series Series::neg_log_one_minus(const Rational& c, unsigned order) {
    std::vector<Rational> v(order + 1, Rational(0));
    Rational p(1);
    for (unsigned n = 1; n <= order; ++n) {
        p *= c;
        v[n] = p / Rational(static_cast<long>(n));
    }
    return Series(std::move(v));
}

const Rational& Series::coefficient(unsigned n) const {
    if (n >= coeffs_.size()) {
        throw std::out_of_range("Series: coefficient " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(coeffs_.size() - 1));
    }
    return coeffs_[n];
}

Series operator+(const Series& a, const Series& b) {
    const unsigned ord = std::min(a.order(), b.order());
    std::vector<Rational> v(ord + 1);
    for (unsigned n = 0; n <= ord; ++n) {
        v[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) {
    const unsigned ord = std::min(a.order(), b.order());
    std::vector<Rational> v(ord + 1);
    for (unsigned n = 0; n <= ord; ++n) {
        v[n] = a.coeffs_[n] - b.coeffs_[n];
    }
    return Series(std::move(v));
}

Series operator*(const Series& a, const Series& b) {
    const unsigned ord = std::min(a.order(), b.order());
    std::vector<Rational> v(ord + 1, Rational(0));
    for (unsigned n = 0; n <= ord; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            v[n] += a.coeffs_[k] * b.coeffs_[n - k];
        }
    }
    return Series(std::move(v));
}

Series operator*(const Rational& s, const Series& t) {
    std::vector<Rational> v(t.coeffs_);
    for (auto& c : v) {
        c *= s;
    }
    return Series(std::move(v));
}

Series Series::xr_derivative(unsigned r) const {
    std::vector<Rational> v(coeffs_.size());
    for (unsigned n = 0; n < coeffs_.size(); ++n) {
        v[n] = rise_factor(n, r) * coeffs_[n];
    }
    return Series(std::move(v));
}

Series Series::nu(unsigned d) const {
    if (d < 1) {
        throw std::invalid_argument("Series::nu: d must be >= 1");
    }
    return xr_derivative(d - 1);
}

}  // namespace betasum
