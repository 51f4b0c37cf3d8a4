#ifndef BETASUM_PI_POWER_HPP
#define BETASUM_PI_POWER_HPP

#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "betasum/rational.hpp"

namespace betasum {

/// Formal sum  sum_k q_k * pi^(k/2)  with rational q_k and nonnegative
/// integer half-power indices k. Terms with distinct k are never merged:
/// pi^(1/2) and pi are treated as linearly independent over the rationals,
/// so equality of PiPower values is structural equality of the term maps.
/// No numeric collapse ever happens here; to_double() is the only bridge.
class PiPower {
public:
    PiPower() = default;
    PiPower(const Rational& r) {  // NOLINT: implicit, rationals embed at k = 0
        if (!r.is_zero()) {
            terms_[0] = r;
        }
    }
    PiPower(long n) : PiPower(Rational(n)) {}  // NOLINT

    /// coef * pi^(k/2)
    static PiPower half_power(unsigned k, const Rational& coef) {
        PiPower p;
        if (!coef.is_zero()) {
            p.terms_[k] = coef;
        }
        return p;
    }

    const std::map<unsigned, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Coefficient of pi^(k/2); zero when the term is absent.
    Rational coefficient(unsigned k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational rational_part() const { return coefficient(0); }

    PiPower& operator+=(const PiPower& o) {
        for (const auto& [k, c] : o.terms_) {
            add_term(k, c);
        }
        return *this;
    }
    PiPower& operator-=(const PiPower& o) {
        for (const auto& [k, c] : o.terms_) {
            add_term(k, -c);
        }
        return *this;
    }

    friend PiPower operator+(PiPower a, const PiPower& b) { return a += b; }
    friend PiPower operator-(PiPower a, const PiPower& b) { return a -= b; }

    friend PiPower operator*(const PiPower& a, const PiPower& b) {
        PiPower r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                r.add_term(ka + kb, ca * cb);
            }
        }
        return r;
    }

    friend PiPower operator*(const Rational& s, const PiPower& p) {
        PiPower r;
        if (s.is_zero()) {
            return r;
        }
        for (const auto& [k, c] : p.terms_) {
            r.terms_[k] = s * c;
        }
        return r;
    }
    friend PiPower operator*(const PiPower& p, const Rational& s) { return s * p; }

    friend bool operator==(const PiPower& a, const PiPower& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiPower& a, const PiPower& b) { return !(a == b); }

    double to_double() const {
        double v = 0.0;
        for (const auto& [k, c] : terms_) {
            v += c.to_double() * std::pow(M_PI, k / 2.0);
        }
        return v;
    }

    /// e.g. "3/16*pi", "1/2*sqrt(pi)", "2 + 1/4*pi^2", "0"
    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            if (k == 0) {
                out += c.str();
            } else {
                out += c.str() + "*" + basis_str(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const PiPower& p) { return os << p.str(); }

private:
    static std::string basis_str(unsigned k) {
        if (k == 1) {
            return "sqrt(pi)";
        }
        if (k == 2) {
            return "pi";
        }
        if (k % 2 == 0) {
            return "pi^" + std::to_string(k / 2);
        }
        return "pi^(" + std::to_string(k) + "/2)";
    }

    void add_term(unsigned k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) {
                terms_.emplace(k, c);
            }
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    std::map<unsigned, Rational> terms_;
};

}  // namespace betasum

#endif
