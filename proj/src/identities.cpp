#include "betasum/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string_view>

#include "betasum/combinatorics.hpp"
#include "betasum/series.hpp"

namespace betasum {

std::string variant_name(Variant v) {
    return v == Variant::paper_form ? "paper-form" : "corrected-form";
}

SequenceSpec SequenceSpec::geometric(const Rational& ratio) {
    return {SequenceKind::geometric, ratio, "a_n = (" + ratio.str() + ")^n"};
}

SequenceSpec SequenceSpec::arithmetic_index() {
    return {SequenceKind::arithmetic_index, Rational(0), "a_n = n"};
}

SequenceSpec SequenceSpec::constant_one() {
    return {SequenceKind::constant_one, Rational(1), "a_n = 1"};
}

Rational SequenceSpec::term(unsigned n) const {
    switch (kind) {
        case SequenceKind::geometric:
            return ratio.pow(static_cast<long>(n));
        case SequenceKind::arithmetic_index:
            return Rational(static_cast<long>(n));
        case SequenceKind::constant_one:
            return Rational(1);
    }
    throw std::logic_error("SequenceSpec: unreachable kind");
}

IntegrandSpec::IntegrandSpec(Poly p_, Poly q_, Rational u1_, Rational u2_, unsigned r_)
    : p(std::move(p_)), q(std::move(q_)), u1(std::move(u1_)), u2(std::move(u2_)), r(r_) {
    if (p.var_count() != 1 || q.var_count() != 1 || p.vars() != q.vars()) {
        throw std::invalid_argument("IntegrandSpec: p and q must be univariate over the same variable");
    }
}

IdentityReport make_report(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                           Variant variant, Rational lhs, Rational rhs, std::string note,
                           bool counts_toward_failure) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.variant = variant;
    r.pass = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.note = std::move(note);
    r.counts_toward_failure = counts_toward_failure;
    return r;
}

// --- evaluators -------------------------------------------------------------

Rational lhs_inverse_binom_sum(unsigned n, const Rational& a, const Rational& b) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
        sum += a.pow(k) * b.pow(static_cast<long>(n - k)) / binomial(n, k);
    }
    return sum;
}

Rational rhs_rockett(unsigned n) {
    Rational sum(0);
    Rational two_k(1);
    for (unsigned k = 1; k <= n + 1; ++k) {
        two_k *= 2;
        sum += two_k / Rational(static_cast<long>(k));
    }
    return Rational(static_cast<long>(n) + 1) * sum / Rational(2).pow(static_cast<long>(n) + 1);
}

Rational rhs_eq2(unsigned n) {
    Rational sum(0);
    Rational two_k(1);
    for (unsigned k = 0; k <= n; ++k) {
        sum += Rational(1) / (Rational(static_cast<long>(n - k) + 1) * two_k);
        two_k *= 2;
    }
    return Rational(static_cast<long>(n) + 1) * sum;
}

Rational rhs_general_ab(unsigned n, const Rational& a, const Rational& b, Variant variant) {
    if (a.is_zero() || b.is_zero() || (a + b).is_zero()) {
        throw std::domain_error("rhs_general_ab: requires a != 0, b != 0, a + b != 0");
    }
    const Rational c = a.reciprocal() + b.reciprocal();  // nonzero since a + b != 0
    Rational sum(0);
    Rational ak(1), bk(1), ck_m1(1);  // a^k, b^k, c^(k-1) as k advances
    for (unsigned k = 1; k <= n + 1; ++k) {
        ak *= a;
        bk *= b;
        const Rational weight = (variant == Variant::paper_form) ? ck_m1 : ck_m1 * c;
        sum += (ak + bk) * weight / Rational(static_cast<long>(k));
        ck_m1 *= c;
    }
    Rational prefactor = Rational(static_cast<long>(n) + 1) / c.pow(static_cast<long>(n) + 1);
    if (variant == Variant::corrected_form) {
        prefactor /= (a + b);
    }
    return prefactor * sum;
}

Rational lhs_k_weighted(unsigned n) {
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) {
        sum += Rational(static_cast<long>(k)) / binomial(n, k);
    }
    return sum;
}

Rational rhs_example2(unsigned n) {
    const Rational two_n = Rational(2).pow(static_cast<long>(n));
    Rational bracket = Rational(static_cast<long>(n) + 1) * (two_n - Rational(1));
    if (n >= 2) {
        Rational two_km1(1, 2);  // 2^(k-1) starting at k = 0
        for (unsigned k = 0; k + 2 <= n; ++k) {
            const long nk = static_cast<long>(n - k);
            bracket += Rational(nk) * Rational(nk - 1) * two_km1 / Rational(static_cast<long>(k) + 1);
            two_km1 *= 2;
        }
    }
    return bracket / two_n;
}

Rational lhs_even_binom(unsigned n) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
        sum += binomial(2UL * n, 2LL * k).reciprocal();
    }
    return sum;
}

Rational rhs_even_binom(unsigned n, Variant variant) {
    Rational sum(0);
    Rational two_k(1);
    for (unsigned k = 0; k <= 2 * n + 1; ++k) {
        sum += two_k / Rational(static_cast<long>(k) + 1);
        two_k *= 2;
    }
    const long divisor_exp = 2L * n + (variant == Variant::paper_form ? 2 : 1);
    return Rational(2L * n + 1) * sum / Rational(2).pow(divisor_exp);
}

Rational lhs_inv_binom_pow_sum(unsigned n, unsigned m) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
        sum += binomial(n, k).pow(-static_cast<long>(m));
    }
    return sum;
}

Rational beta_integral_alternating(unsigned n, unsigned k) {
    Rational sum(0);
    for (unsigned i = 0; i <= n - k; ++i) {
        const Rational term = binomial(n - k, i) / Rational(static_cast<long>(k + 1 + i));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational rhs_prop_mt12(unsigned n, unsigned m, Variant variant) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
        Rational inner(0);
        if (variant == Variant::corrected_form) {
            inner = beta_integral_alternating(n, k);
        } else {
            for (unsigned i = 0; i <= k; ++i) {
                const Rational term = binomial(k, i) / Rational(static_cast<long>(k + 1 + i));
                inner += (i % 2 == 0) ? term : -term;
            }
        }
        sum += inner.pow(static_cast<long>(m));
    }
    return Rational(static_cast<long>(n) + 1).pow(static_cast<long>(m)) * sum;
}

// --- method checks ----------------------------------------------------------

IdentityReport theorem1_coefficient_check(const IntegrandSpec& spec, const SequenceSpec& aseq,
                                          const SequenceSpec& bseq, unsigned n, int order) {
    const unsigned ord = order < 0 ? n : static_cast<unsigned>(order);
    if (n > ord) {
        throw std::invalid_argument("theorem1_coefficient_check: series order insufficient for n");
    }

    std::vector<Poly> p_pows{Poly::constant(spec.p.vars(), Rational(1))};
    std::vector<Poly> q_pows{p_pows[0]};
    for (unsigned j = 1; j <= ord; ++j) {
        p_pows.push_back(p_pows.back() * spec.p);
        q_pows.push_back(q_pows.back() * spec.q);
    }

    // direct route: (n+r)!/n! sum_k a_k b_(n-k) integral p^k q^(n-k)
    Rational direct(0);
    for (unsigned k = 0; k <= n; ++k) {
        direct += aseq.term(k) * bseq.term(n - k) * integrate_interval(p_pows[k] * q_pows[n - k], spec.u1, spec.u2);
    }
    direct *= rise_factor(n, spec.r);

    // series route: expand A(x p(t)) B(x q(t)) as a series with polynomial
    // coefficients, integrate term-wise, then apply the xr derivative.
    std::vector<Rational> integrated(ord + 1);
    for (unsigned j = 0; j <= ord; ++j) {
        Poly cj(spec.p.vars());
        for (unsigned k = 0; k <= j; ++k) {
            cj += (aseq.term(k) * bseq.term(j - k)) * (p_pows[k] * q_pows[j - k]);
        }
        integrated[j] = integrate_interval(cj, spec.u1, spec.u2);
    }
    const Rational via_series = Series(std::move(integrated)).xr_derivative(spec.r).coefficient(n);

    return make_report("theorem1",
                       {{"n", std::to_string(n)},
                        {"r", std::to_string(spec.r)},
                        {"p", spec.p.str()},
                        {"q", spec.q.str()},
                        {"u1", spec.u1.str()},
                        {"u2", spec.u2.str()},
                        {"a", aseq.description},
                        {"b", bseq.description}},
                       Variant::paper_form, direct, via_series);
}

IdentityReport theorem_mt11_check(unsigned n, unsigned m, const SequenceSpec& aseq, const SequenceSpec& bseq) {
    if (m < 1) {
        throw std::invalid_argument("theorem_mt11_check: m must be >= 1");
    }
    Rational direct(0);
    for (unsigned k = 0; k <= n; ++k) {
        direct += binomial(n, k).pow(-static_cast<long>(m)) * aseq.term(k) * bseq.term(n - k);
    }

    std::vector<std::string> vars;
    for (unsigned i = 0; i < m; ++i) {
        vars.push_back("t" + std::to_string(i + 1));
    }
    const std::vector<std::pair<Rational, Rational>> unit_box(m, {Rational(0), Rational(1)});

    Rational integral_side(0);
    for (unsigned k = 0; k <= n; ++k) {
        // prod_i t_i^k (1-t_i)^(n-k), expanded factor by factor
        Poly prod = Poly::constant(vars, Rational(1));
        for (unsigned i = 0; i < m; ++i) {
            Poly factor(vars);
            for (unsigned j = 0; j <= n - k; ++j) {
                Poly::Exponents e(m, 0);
                e[i] = k + j;
                const Rational coef = binomial(n - k, j);
                factor += Poly::monomial(vars, std::move(e), (j % 2 == 0) ? coef : -coef);
            }
            prod = prod * factor;
        }
        integral_side += aseq.term(k) * bseq.term(n - k) * integrate_box(prod, unit_box);
    }
    integral_side *= Rational(static_cast<long>(n) + 1).pow(static_cast<long>(m));

    return make_report("mt11",
                       {{"n", std::to_string(n)},
                        {"m", std::to_string(m)},
                        {"a", aseq.description},
                        {"b", bseq.description}},
                       Variant::paper_form, direct, integral_side);
}

IdentityReport dirichlet_exact_check(const SimplexSpec& spec) {
    const unsigned n = spec.total_degree();
    std::vector<unsigned long> parts(spec.exponents.begin(), spec.exponents.end());
    const Rational direct = multinomial(n, parts).reciprocal();
    const Rational integral_side = rise_factor(n, spec.dimension - 1) * integrate_prob_simplex(spec);

    std::string alpha = "(";
    for (std::size_t i = 0; i < spec.exponents.size(); ++i) {
        alpha += (i ? "," : "") + std::to_string(spec.exponents[i]);
    }
    alpha += ")";
    return make_report("dirichlet", {{"d", std::to_string(spec.dimension)}, {"alpha", alpha}},
                       Variant::paper_form, direct, integral_side);
}

IdentityReport theorem_geth_check(unsigned n, unsigned d, unsigned m, const std::vector<SequenceSpec>& seqs) {
    if (d < 2) {
        throw std::invalid_argument("theorem_geth_check: d must be >= 2");
    }
    if (m < 1) {
        throw std::invalid_argument("theorem_geth_check: m must be >= 1");
    }
    if (seqs.size() != d) {
        throw std::invalid_argument("theorem_geth_check: one sequence per coordinate required");
    }

    // the simplex integral is symmetric in the exponents, so cache by sorted tuple
    std::map<std::vector<unsigned>, Rational> cache;
    const auto simplex_integral = [&](const std::vector<unsigned>& alpha) {
        std::vector<unsigned> key = alpha;
        std::sort(key.begin(), key.end());
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, integrate_prob_simplex(SimplexSpec(d, key))).first;
        }
        return it->second;
    };

    Rational direct(0);
    Rational integral_sum(0);
    std::vector<unsigned> alpha(d, 0);
    const std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned rem) {
        if (pos + 1 == d) {
            alpha[pos] = rem;
            Rational weight(1);
            for (unsigned j = 0; j < d; ++j) {
                weight *= seqs[j].term(alpha[j]);
            }
            if (!weight.is_zero()) {
                std::vector<unsigned long> parts(alpha.begin(), alpha.end());
                direct += multinomial(n, parts).pow(-static_cast<long>(m)) * weight;
                integral_sum += weight * simplex_integral(alpha).pow(static_cast<long>(m));
            }
            return;
        }
        for (unsigned v = 0; v <= rem; ++v) {
            alpha[pos] = v;
            walk(pos + 1, rem - v);
        }
    };
    walk(0, n);

    const Rational integral_side = rise_factor(n, d - 1).pow(static_cast<long>(m)) * integral_sum;

    std::string seq_desc;
    for (unsigned j = 0; j < d; ++j) {
        seq_desc += (j ? "; " : "") + seqs[j].description;
    }
    return make_report("geth",
                       {{"n", std::to_string(n)},
                        {"d", std::to_string(d)},
                        {"m", std::to_string(m)},
                        {"seqs", seq_desc}},
                       Variant::paper_form, direct, integral_side);
}

// --- suite driver -----------------------------------------------------------

namespace {

/// Deterministic generator: raw mt19937_64 draws only, no distribution
/// objects, so identical seeds give identical streams on every platform.
class SuiteRng {
public:
    explicit SuiteRng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long num_lo, long num_hi, long den_hi, bool nonzero) {
        for (;;) {
            const long nu = uniform(num_lo, num_hi);
            if (nonzero && nu == 0) {
                continue;
            }
            return Rational(nu, uniform(1, den_hi));
        }
    }

private:
    std::mt19937_64 eng_;
};

std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL);
}

const char* kGeneralAbMisprint =
    "documented misprint: the printed closed form omits the 1/(a+b) factor and one power of "
    "c = 1/a + 1/b inside the sum; it fails the direct-summation oracle for general a, b";
const char* kEvenBinomMisprint =
    "documented misprint: printed divisor 2^(2n+2); the corrected form divides by 2^(2n+1)";
const char* kPropMt12Misprint =
    "documented misprint: printed inner sum runs over i <= k with C(k,i); the corrected form "
    "runs over i <= n-k with C(n-k,i), the expansion of the Beta integral";

void append_rockett(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        out.push_back(make_report("rockett", {{"n", std::to_string(n)}}, Variant::paper_form,
                                  lhs_inverse_binom_sum(n, Rational(1), Rational(1)), rhs_rockett(n)));
    }
}

void append_eq2(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        out.push_back(make_report("eq2", {{"n", std::to_string(n)}}, Variant::paper_form,
                                  lhs_inverse_binom_sum(n, Rational(1), Rational(1)), rhs_eq2(n)));
    }
}

void append_general_ab(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    const auto push_pair = [&out](unsigned n, const Rational& a, const Rational& b) {
        const Rational oracle = lhs_inverse_binom_sum(n, a, b);
        const std::vector<std::pair<std::string, std::string>> params{
            {"n", std::to_string(n)}, {"a", a.str()}, {"b", b.str()}};
        out.push_back(make_report("general-ab", params, Variant::corrected_form, oracle,
                                  rhs_general_ab(n, a, b, Variant::corrected_form)));
        out.push_back(make_report("general-ab", params, Variant::paper_form, oracle,
                                  rhs_general_ab(n, a, b, Variant::paper_form), kGeneralAbMisprint,
                                  /*counts_toward_failure=*/false));
    };

    if (cfg.n_max >= 1) {
        push_pair(1, Rational(1), Rational(2));  // fixed misprint demonstration: 6 vs oracle 3
    }
    SuiteRng rng(stream_seed(cfg.seed, "general-ab"));
    for (unsigned i = 0; i < 50; ++i) {
        Rational a = rng.rational(-9, 9, 9, true);
        Rational b = rng.rational(-9, 9, 9, true);
        while ((a + b).is_zero()) {
            b = rng.rational(-9, 9, 9, true);
        }
        push_pair(static_cast<unsigned>(rng.uniform(0, cfg.n_max)), a, b);
    }
}

void append_k_weighted(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        out.push_back(make_report("k-weighted", {{"n", std::to_string(n)}}, Variant::paper_form,
                                  lhs_k_weighted(n), rhs_example2(n)));
    }
}

void append_even_binom(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        const Rational oracle = lhs_even_binom(n);
        const std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(n)}};
        out.push_back(make_report("even-binom", params, Variant::corrected_form, oracle,
                                  rhs_even_binom(n, Variant::corrected_form)));
        out.push_back(make_report("even-binom", params, Variant::paper_form, oracle,
                                  rhs_even_binom(n, Variant::paper_form), kEvenBinomMisprint,
                                  /*counts_toward_failure=*/false));
    }
}

void append_inv_binom_pow(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned m = 1; m <= cfg.m_max; ++m) {
        for (unsigned n = 0; n <= cfg.n_max; ++n) {
            const Rational oracle = lhs_inv_binom_pow_sum(n, m);
            const std::vector<std::pair<std::string, std::string>> params{
                {"n", std::to_string(n)}, {"m", std::to_string(m)}};
            out.push_back(make_report("inv-binom-pow", params, Variant::corrected_form, oracle,
                                      rhs_prop_mt12(n, m, Variant::corrected_form)));
            out.push_back(make_report("inv-binom-pow", params, Variant::paper_form, oracle,
                                      rhs_prop_mt12(n, m, Variant::paper_form), kPropMt12Misprint,
                                      /*counts_toward_failure=*/false));
        }
    }
}

void append_corollary_alt(std::vector<IdentityReport>& out, const SuiteConfig& cfg) {
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        Rational alternating(0);
        for (unsigned k = 0; k <= n; ++k) {
            alternating += beta_integral_alternating(n, k);
        }
        alternating *= Rational(static_cast<long>(n) + 1);
        out.push_back(make_report("corollary-alt", {{"n", std::to_string(n)}}, Variant::paper_form,
                                  rhs_eq2(n), alternating,
                                  "both sides equal the direct sum of inverse binomials"));
    }
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"rockett", CatalogKind::identity, false,
         "sum 1/C(n,k) equals (n+1)/2^(n+1) sum_{k=1..n+1} 2^k/k", ""},
        {"eq2", CatalogKind::identity, false,
         "sum 1/C(n,k) equals (n+1) sum_{k=0..n} 1/((n+1-k) 2^k)", ""},
        {"general-ab", CatalogKind::identity, true,
         "sum a^k b^(n-k)/C(n,k) closed form for nonzero a, b with a+b != 0", kGeneralAbMisprint},
        {"k-weighted", CatalogKind::identity, false,
         "sum k/C(n,k) closed form", ""},
        {"even-binom", CatalogKind::identity, true,
         "sum 1/C(2n,2k) closed form", kEvenBinomMisprint},
        {"inv-binom-pow", CatalogKind::identity, true,
         "sum 1/C(n,k)^m as (n+1)^m times a sum of m-th powers of Beta integrals", kPropMt12Misprint},
        {"corollary-alt", CatalogKind::identity, false,
         "(n+1) sum 1/((n+1-k) 2^k) equals (n+1) sum of alternating Beta expansions", ""},
        {"second-corollary-alt", CatalogKind::unverifiable, false,
         "second displayed equality for sum 1/C(n,k)^2",
         "unverifiable as printed: the display contains an undefined index"},
        {"theorem1", CatalogKind::method, false,
         "coefficient-level check of the master integral identity on seeded random instances", ""},
        {"mt11", CatalogKind::method, false,
         "m-th power inverse binomial sums against m-fold box integrals", ""},
        {"geth", CatalogKind::method, false,
         "composition sums of inverse multinomials against simplex integrals", ""},
        {"dirichlet", CatalogKind::method, false,
         "inverse multinomial as (n+d-1)!/n! times the simplex monomial integral", ""},
        {"gamma-recurrence", CatalogKind::numeric, false,
         "Gamma(x+1) = x Gamma(x) residual on a real grid", ""},
        {"eq1-real", CatalogKind::numeric, false,
         "(s+1) integral t^r (1-t)^(s-r) against 1/C(s,r) for real s, r", ""},
        {"wallis-numeric", CatalogKind::numeric, false,
         "numerical sine-power integrals against exact Wallis values and the Gamma-ratio form", ""},
        {"sin-series", CatalogKind::numeric, false,
         "sine-power series sum against the integral of 1/(1 - a sin^m t)", ""},
        {"dirichlet-mc", CatalogKind::numeric, false,
         "Monte Carlo volume integrals against the Dirichlet closed form", ""},
        {"sin-series-divergent", CatalogKind::unverifiable, false,
         "boundary instances of the sine-power series (a = 1, and the arctanh forms for b > 1)",
         "unverifiable as printed: the integral diverges at a = 1 and the arctanh arguments fall "
         "outside (-1, 1)"},
    };
    return entries;
}

std::string catalog_kind_name(CatalogKind k) {
    switch (k) {
        case CatalogKind::identity:
            return "identity";
        case CatalogKind::method:
            return "method";
        case CatalogKind::numeric:
            return "numeric";
        case CatalogKind::unverifiable:
            return "unverifiable";
    }
    return "?";
}

namespace {

std::string catalog_listing() {
    std::string s = "available identities:";
    for (const auto& e : catalog()) {
        if (e.kind == CatalogKind::identity) {
            s += " " + e.name;
        }
    }
    s += "; method checks (run with method-check):";
    for (const auto& e : catalog()) {
        if (e.kind == CatalogKind::method) {
            s += " " + e.name;
        }
    }
    s += "; numeric checks (run with numeric):";
    for (const auto& e : catalog()) {
        if (e.kind == CatalogKind::numeric) {
            s += " " + e.name;
        }
    }
    return s;
}

}  // namespace

std::vector<IdentityReport> run_suite(const std::vector<std::string>& selection, const SuiteConfig& config) {
    if (selection.empty()) {
        throw unknown_identity_error("no identities selected; " + catalog_listing());
    }
    for (const auto& name : selection) {
        const auto it = std::find_if(catalog().begin(), catalog().end(),
                                     [&](const CatalogEntry& e) { return e.name == name; });
        if (it == catalog().end()) {
            throw unknown_identity_error("unknown identity '" + name + "'; " + catalog_listing());
        }
        if (it->kind == CatalogKind::unverifiable) {
            throw unknown_identity_error("identity '" + name + "' is catalogued as unverifiable as printed "
                                         "and cannot be run; " + catalog_listing());
        }
        if (it->kind != CatalogKind::identity) {
            throw unknown_identity_error("'" + name + "' is a " + catalog_kind_name(it->kind) +
                                         " check, not a verify identity; " + catalog_listing());
        }
    }

    std::vector<IdentityReport> out;
    for (const auto& name : selection) {
        if (name == "rockett") {
            append_rockett(out, config);
        } else if (name == "eq2") {
            append_eq2(out, config);
        } else if (name == "general-ab") {
            append_general_ab(out, config);
        } else if (name == "k-weighted") {
            append_k_weighted(out, config);
        } else if (name == "even-binom") {
            append_even_binom(out, config);
        } else if (name == "inv-binom-pow") {
            append_inv_binom_pow(out, config);
        } else if (name == "corollary-alt") {
            append_corollary_alt(out, config);
        }
    }
    return out;
}

std::vector<IdentityReport> run_method_checks(const SuiteConfig& config) {
    std::vector<IdentityReport> out;

    // seeded random instances of the master coefficient identity
    SuiteRng rng(stream_seed(config.seed, "theorem1"));
    const auto random_sequence = [&rng]() {
        switch (rng.uniform(0, 2)) {
            case 0:
                return SequenceSpec::geometric(rng.rational(-3, 3, 3, true));
            case 1:
                return SequenceSpec::arithmetic_index();
            default:
                return SequenceSpec::constant_one();
        }
    };
    for (unsigned i = 0; i < config.instances; ++i) {
        const auto random_poly = [&rng]() {
            std::vector<Rational> coeffs;
            for (int j = 0; j <= 3; ++j) {
                coeffs.push_back(rng.rational(-3, 3, 4, false));
            }
            return Poly::univariate("t", coeffs);
        };
        Rational u1 = rng.rational(-8, 8, 4, false);
        Rational u2 = rng.rational(-8, 8, 4, false);
        while (u1 == u2) {
            u2 = rng.rational(-8, 8, 4, false);
        }
        if (u2 < u1) {
            std::swap(u1, u2);
        }
        const IntegrandSpec spec(random_poly(), random_poly(), u1, u2,
                                 static_cast<unsigned>(rng.uniform(0, 2)));
        const unsigned n = static_cast<unsigned>(rng.uniform(0, 25));
        out.push_back(theorem1_coefficient_check(spec, random_sequence(), random_sequence(), n));
    }

    // m-th power sums, constant-one and geometric families
    const std::vector<std::pair<SequenceSpec, SequenceSpec>> mt11_families{
        {SequenceSpec::constant_one(), SequenceSpec::constant_one()},
        {SequenceSpec::geometric(Rational(1, 2)), SequenceSpec::geometric(Rational(-2, 3))},
    };
    for (unsigned m = 1; m <= config.m_max; ++m) {
        for (unsigned n = 0; n <= std::min(config.n_max, 30u); ++n) {
            for (const auto& [a, b] : mt11_families) {
                out.push_back(theorem_mt11_check(n, m, a, b));
            }
        }
    }

    // composition sums over the probability simplex
    const std::vector<SequenceSpec> geth_geo{
        SequenceSpec::geometric(Rational(1, 2)),
        SequenceSpec::geometric(Rational(3)),
        SequenceSpec::geometric(Rational(-1, 3)),
    };
    for (unsigned d = 2; d <= 3; ++d) {
        for (unsigned m = 1; m <= std::min(config.m_max, 2u); ++m) {
            for (unsigned n = 0; n <= std::min(config.n_max, 15u); ++n) {
                out.push_back(theorem_geth_check(n, d, m, std::vector<SequenceSpec>(d, SequenceSpec::constant_one())));
                out.push_back(theorem_geth_check(
                    n, d, m, std::vector<SequenceSpec>(geth_geo.begin(), geth_geo.begin() + d)));
            }
        }
    }

    // the multinomial-inverse identity over the full desk-scale grid
    for (unsigned d = 1; d <= 4; ++d) {
        std::vector<unsigned> alpha(d, 0);
        const std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned budget) {
            if (pos + 1 == d) {
                for (unsigned v = 0; v <= budget; ++v) {
                    alpha[pos] = v;
                    out.push_back(dirichlet_exact_check(SimplexSpec(d, alpha)));
                }
                return;
            }
            for (unsigned v = 0; v <= budget; ++v) {
                alpha[pos] = v;
                walk(pos + 1, budget - v);
            }
        };
        walk(0, 8);
    }

    return out;
}

}  // namespace betasum
