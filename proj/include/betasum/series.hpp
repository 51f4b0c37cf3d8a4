#ifndef BETASUM_SERIES_HPP
#define BETASUM_SERIES_HPP

#include <vector>

#include "betasum/rational.hpp"

namespace betasum {

/// Truncated formal power series in one variable over exact rationals.
/// The truncation order N is data: exactly N+1 coefficients are stored, and
/// arithmetic between series carries the minimum order of its inputs, so a
/// result never claims precision its inputs did not hold. Reading past the
/// held order is an error, never a silent zero.
class Series {
public:
    /// coeffs = [c_0, ..., c_N]; must be nonempty.
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(unsigned order);
    /// Coefficients c^n: the expansion of 1/(1 - c x).
    static Series geometric(const Rational& c, unsigned order);
    /// Coefficients of -ln(1 - c x): c^n/n for n >= 1, zero at n = 0.
    static Series neg_log_one_minus(const Rational& c, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    /// c_n; throws std::out_of_range when n exceeds the truncation order.
    const Rational& coefficient(unsigned n) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    /// Cauchy product, truncated to the minimum of the two orders.
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& s, const Series& t);
    friend Series operator*(const Series& t, const Rational& s) { return s * t; }

    /// The coefficient scaling of d^r/dx^r [x^r f(x)]: c_n -> (n+r)!/n! c_n.
    Series xr_derivative(unsigned r) const;
    /// mu(f) = d/dx (x f): c_n -> (n+1) c_n.
    Series mu() const { return xr_derivative(1); }
    /// nu_d(f) = d^(d-1)/dx^(d-1) (x^(d-1) f): c_n -> (n+d-1)!/n! c_n. d >= 1.
    Series nu(unsigned d) const;

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace betasum

#endif
