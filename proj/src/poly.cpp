#include "betasum/poly.hpp"

#include <stdexcept>

namespace betasum {

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) {
        p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    }
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) {
        throw std::out_of_range("Poly::variable: index out of range");
    }
    Poly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
    if (exps.size() != vars.size()) {
        throw std::invalid_argument("Poly::monomial: exponent tuple length mismatch");
    }
    Poly p(std::move(vars));
    if (!c.is_zero()) {
        p.terms_.emplace(std::move(exps), c);
    }
    return p;
}

Poly Poly::univariate(const std::string& var, const std::vector<Rational>& coeffs) {
    Poly p({var});
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) {
            p.terms_.emplace(Exponents{static_cast<unsigned>(i)}, coeffs[i]);
        }
    }
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    for (unsigned e : terms_.begin()->first) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

Rational Poly::constant_value() const {
    if (!is_constant()) {
        throw std::logic_error("Poly::constant_value: polynomial is not constant");
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Poly::degree(std::size_t var) const {
    if (var >= vars_.size()) {
        throw std::out_of_range("Poly::degree: variable index out of range");
    }
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[var]);
    }
    return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void Poly::require_same_vars(const Poly& o) const {
    if (vars_ != o.vars_) {
        throw std::invalid_argument("Poly: operands defined over different variables");
    }
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace(e, -c);
    }
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_vars(b);
    Poly r(a.vars_);
    Poly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    Poly r(p.vars_);
    if (s.is_zero()) {
        return r;
    }
    for (const auto& [e, c] : p.terms_) {
        r.terms_.emplace(e, s * c);
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(vars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) {
        throw std::invalid_argument("Poly::eval: point size mismatch");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= point[i].pow(static_cast<long>(e[i]));
            }
        }
        acc += term;
    }
    return acc;
}

Poly Poly::substitute(std::size_t var, const Poly& replacement) const {
    if (var >= vars_.size()) {
        throw std::out_of_range("Poly::substitute: variable index out of range");
    }
    require_same_vars(replacement);
    // powers of the replacement are shared across terms
    std::vector<Poly> pows{constant(vars_, Rational(1))};
    const unsigned dmax = degree(var);
    pows.reserve(dmax + 1);
    for (unsigned j = 1; j <= dmax; ++j) {
        pows.push_back(pows.back() * replacement);
    }
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        r += Poly::monomial(vars_, std::move(rest), c) * pows[e[var]];
    }
    return r;
}

Poly Poly::antiderivative(std::size_t var) const {
    if (var >= vars_.size()) {
        throw std::out_of_range("Poly::antiderivative: variable index out of range");
    }
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents up = e;
        up[var] += 1;
        r.terms_.emplace(std::move(up), c / Rational(static_cast<long>(e[var]) + 1));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += vars_[i];
            if (e[i] > 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            out += c.str();
        } else if (c == Rational(1)) {
            out += mono;
        } else {
            out += c.str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace betasum
