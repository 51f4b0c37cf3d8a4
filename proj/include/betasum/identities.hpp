#ifndef BETASUM_IDENTITIES_HPP
#define BETASUM_IDENTITIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betasum/integrate.hpp"
#include "betasum/poly.hpp"
#include "betasum/rational.hpp"

namespace betasum {

/// Which side of a documented misprint an evaluator computes: the identity
/// exactly as printed in its source, or the minimal repair that matches the
/// direct-summation oracle.
enum class Variant { paper_form, corrected_form };

std::string variant_name(Variant v);

/// Sequences are a closed enumeration so that every kind has an exactly
/// known ordinary generating function for the coefficient-level checks.
enum class SequenceKind { geometric, arithmetic_index, constant_one };

struct SequenceSpec {
    SequenceKind kind = SequenceKind::constant_one;
    Rational ratio = Rational(1);  // used by geometric only
    std::string description;

    static SequenceSpec geometric(const Rational& ratio);
    static SequenceSpec arithmetic_index();
    static SequenceSpec constant_one();

    /// a_n for this sequence kind.
    Rational term(unsigned n) const;
};

/// The data of one instance of the master coefficient identity: integrand
/// factors p(t), q(t) on [u1, u2] and the derivative order r.
struct IntegrandSpec {
    Poly p;
    Poly q;
    Rational u1;
    Rational u2;
    unsigned r = 0;

    IntegrandSpec(Poly p_, Poly q_, Rational u1_, Rational u2_, unsigned r_);
};

/// Outcome record for one identity instance. The verdict is defined by
/// exact equality: pass if and only if lhs == rhs. `counts_toward_failure`
/// is false for paper-form rows of documented misprints, whose failure is
/// expected and reported rather than treated as a suite failure.
struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    Variant variant = Variant::paper_form;
    Rational lhs;
    Rational rhs;
    bool pass = false;
    std::string note;
    bool counts_toward_failure = true;
};

IdentityReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                           Variant variant, Rational lhs, Rational rhs, std::string note = "",
                           bool counts_toward_failure = true);

// --- direct-summation oracles and closed-form evaluators -------------------

/// sum_{k=0}^n a^k b^(n-k) / C(n,k), by direct summation. The oracle side
/// for the whole geometric family.
Rational lhs_inverse_binom_sum(unsigned n, const Rational& a, const Rational& b);

/// (n+1)/2^(n+1) * sum_{k=1}^{n+1} 2^k/k
Rational rhs_rockett(unsigned n);

/// (n+1) * sum_{k=0}^n 1/((n+1-k) 2^k)
Rational rhs_eq2(unsigned n);

/// Closed form for the general (a, b) geometric sum; requires a != 0,
/// b != 0, a + b != 0. With c = 1/a + 1/b:
///   paper form:     (n+1)/c^(n+1)          * sum_{k=1}^{n+1} (a^k+b^k) c^(k-1)/k
///   corrected form: (n+1)/((a+b) c^(n+1))  * sum_{k=1}^{n+1} (a^k+b^k) c^k/k
Rational rhs_general_ab(unsigned n, const Rational& a, const Rational& b, Variant variant);

/// sum_{k=0}^n k / C(n,k), by direct summation.
Rational lhs_k_weighted(unsigned n);

/// 1/2^n [ (n+1)(2^n - 1) + sum_{k=0}^{n-2} (n-k)(n-k-1) 2^(k-1)/(k+1) ]
Rational rhs_example2(unsigned n);

/// sum_{k=0}^n 1 / C(2n, 2k), by direct summation.
Rational lhs_even_binom(unsigned n);

/// (2n+1)/2^(2n+2) * sum_{k=0}^{2n+1} 2^k/(k+1) as printed (paper form);
/// the corrected form divides by 2^(2n+1) instead.
Rational rhs_even_binom(unsigned n, Variant variant);

/// sum_{k=0}^n 1 / C(n,k)^m, by direct summation.
Rational lhs_inv_binom_pow_sum(unsigned n, unsigned m);

/// Alternating expansion of the Beta integral:
/// sum_{i=0}^{n-k} (-1)^i C(n-k, i)/(k+1+i) = integral_0^1 t^k (1-t)^(n-k) dt.
Rational beta_integral_alternating(unsigned n, unsigned k);

/// (n+1)^m * sum_k [inner]^m where the corrected inner sum is
/// beta_integral_alternating(n, k); the paper-form variant misindexes it as
/// sum_{i=0}^{k} (-1)^i C(k, i)/(k+1+i).
Rational rhs_prop_mt12(unsigned n, unsigned m, Variant variant);

// --- coefficient-level method checks ---------------------------------------

/// Verifies, exactly, the coefficient of x^n in the master identity:
/// (n+r)!/n! sum_k a_k b_(n-k) integral p^k q^(n-k)  equals  coefficient n of
/// the xr-derivative of the series whose x^j coefficient is the integral of
/// the Cauchy-expanded product A(x p(t)) B(x q(t)). The two sides go through
/// independent code paths (direct summation vs series/poly machinery).
/// `order` is the truncation order used for the series side; it defaults to
/// n and must be >= n.
IdentityReport theorem1_coefficient_check(const IntegrandSpec& spec, const SequenceSpec& aseq,
                                          const SequenceSpec& bseq, unsigned n, int order = -1);

/// Verifies sum_k C(n,k)^-m a_k b_(n-k) (direct) against the m-fold box
/// integral route (n+1)^m sum_k a_k b_(n-k) * box integral of
/// prod_i t_i^k (1-t_i)^(n-k) over [0,1]^m.
IdentityReport theorem_mt11_check(unsigned n, unsigned m, const SequenceSpec& aseq, const SequenceSpec& bseq);

/// Verifies 1/multinomial(n, alpha) == (n+d-1)!/n! * integrate_prob_simplex.
IdentityReport dirichlet_exact_check(const SimplexSpec& spec);

/// Verifies the d-dimensional sum over compositions of n:
/// sum_alpha C(n; alpha)^-m prod_j a^(j)_(alpha_j) (direct) against
/// ((n+d-1)!/n!)^m sum_alpha prod_j a^(j)_(alpha_j) * (simplex integral)^m.
IdentityReport theorem_geth_check(unsigned n, unsigned d, unsigned m, const std::vector<SequenceSpec>& seqs);

// --- suite driver -----------------------------------------------------------

struct SuiteConfig {
    unsigned n_max = 50;
    unsigned m_max = 3;
    std::uint64_t seed = 0;
    unsigned instances = 20;
};

enum class CatalogKind { identity, method, numeric, unverifiable };

struct CatalogEntry {
    std::string name;
    CatalogKind kind;
    bool has_corrected_form;
    std::string description;
    std::string note;
};

/// Everything the suite knows about: runnable identities, method checks,
/// numeric checks, and entries that are catalogued but unverifiable as
/// printed. Order is the canonical listing order.
const std::vector<CatalogEntry>& catalog();

std::string catalog_kind_name(CatalogKind k);

/// Thrown for selections that name nothing runnable; the message carries
/// the catalog listing.
struct unknown_identity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Evaluates each selected identity over its deterministic parameter grid
/// (n up to n_max, m up to m_max where applicable; randomized families are
/// derived from the seed). Reports include both variants where a corrected
/// form exists.
std::vector<IdentityReport> run_suite(const std::vector<std::string>& selection, const SuiteConfig& config);

/// The theorem-level checks: seeded random master-identity instances plus
/// the m-th power, Dirichlet, and composition-sum grids.
std::vector<IdentityReport> run_method_checks(const SuiteConfig& config);

}  // namespace betasum

#endif
