#ifndef BETASUM_QUADRATURE_HPP
#define BETASUM_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace betasum {

/// Floating-point validation layer. Everything here is approximate by
/// design; the exact modules never depend on it.

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // upper bound from the embedded pair
    std::uint64_t evaluations = 0;
};

/// Thrown when adaptive subdivision exhausts its depth budget, which is the
/// signal for a non-smooth or singular integrand, and by the Monte Carlo
/// sampler when the acceptance region is degenerate.
struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (7, 15) bisection with absolute tolerance.
/// The local budget halves with each split, so the accumulated estimate of
/// an accepted partition never exceeds `tol`.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Gamma for real x > 0 via a Lanczos rational kernel, with the upward
/// recurrence Gamma(x) = Gamma(x+1)/x applied below 1/2.
double gamma_real(double x);

/// Gamma(s+1) / (Gamma(r+1) Gamma(s-r+1)); requires s, r, s-r all > -1.
double generalized_binomial(double s, double r);

/// Numerical integral of sin^p over [0, pi/2] for real p >= 0.
QuadratureResult wallis_numeric(double p);

/// Closed form sqrt(pi)/2 * Gamma((p+1)/2) / Gamma(p/2 + 1) for the Wallis
/// integral; the denominator argument follows the recurrence-consistent
/// reading (the printed (p+3)/2 fails at p = 0).
double wallis_gamma_form(double p);

/// Region sum_i (x_i/a_i)^p_i <= 1 with integrand prod_j x_j^(alpha_j - 1);
/// all entries strictly positive.
struct DirichletSpec {
    std::vector<double> alpha;
    std::vector<double> p;
    std::vector<double> a;

    DirichletSpec(std::vector<double> alpha_, std::vector<double> p_, std::vector<double> a_);
    std::size_t dimension() const { return alpha.size(); }
};

/// prod(a_i^alpha_i) / prod(p_i) * prod Gamma(alpha_i/p_i) / Gamma(1 + sum alpha_i/p_i)
double dirichlet_closed_form(const DirichletSpec& spec);

/// Rejection-sampling Monte Carlo estimate over the bounding box, with the
/// sample standard error in `error_estimate`. Deterministic for a fixed
/// seed (mt19937_64 bit stream, no library distributions).
QuadratureResult dirichlet_mc(const DirichletSpec& spec, std::uint64_t samples, std::uint64_t seed);

/// Report record for one numeric comparison.
struct NumericReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    std::string variant = "paper-form";
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;  // effective acceptance threshold
    bool pass = false;
    std::string note;
};

/// Compares the truncated series sum_{n<=N} a^n (2/sqrt(pi)) W(mn), with
/// exact Wallis values floated, against (2/sqrt(pi)) times the adaptive
/// integral of 1/(1 - a sin^m t). N grows until the geometric tail bound
/// drops below tol/10. Requires |a| <= 0.9.
NumericReport sin_series_check(double a, unsigned m, double tol);

struct NumericConfig {
    double tolerance = 1e-9;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

/// The full floating-point validation suite: Gamma recurrence residuals,
/// the real-parameter Beta/binomial identity, Wallis comparisons, the
/// sine-power series, and the Monte Carlo Dirichlet checks.
std::vector<NumericReport> run_numeric_checks(const NumericConfig& config);

}  // namespace betasum

#endif
