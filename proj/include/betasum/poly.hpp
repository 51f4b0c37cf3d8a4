#ifndef BETASUM_POLY_HPP
#define BETASUM_POLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "betasum/rational.hpp"

namespace betasum {

/// Multivariate polynomial with rational coefficients over a fixed, ordered
/// list of named variables. Stored sparse: exponent tuple -> coefficient,
/// with no zero coefficients kept. All operations are exact and closed.
/// Binary operations require both operands to share the same variable list.
class Poly {
public:
    using Exponents = std::vector<unsigned>;

    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, std::size_t index);
    static Poly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c);
    /// Univariate c0 + c1 t + c2 t^2 + ...
    static Poly univariate(const std::string& var, const std::vector<Rational>& coeffs);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t var_count() const { return vars_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws std::logic_error otherwise.
    Rational constant_value() const;
    unsigned degree(std::size_t var) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    /// Exact power by repeated multiplication.
    Poly pow(unsigned e) const;

    /// Full evaluation; point must supply one value per variable.
    Rational eval(const std::vector<Rational>& point) const;

    /// Replaces variable `var` by `replacement` (same variable list).
    Poly substitute(std::size_t var, const Poly& replacement) const;

    /// Term-wise antiderivative in `var`: t^e -> t^(e+1)/(e+1).
    Poly antiderivative(std::size_t var) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void require_same_vars(const Poly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace betasum

#endif
