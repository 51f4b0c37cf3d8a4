#ifndef BETASUM_RATIONAL_HPP
#define BETASUM_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace betasum {

/// Arbitrary-precision rational scalar, always held in canonical form:
/// positive denominator, gcd(|numerator|, denominator) == 1.
/// Every operation is exact; there is no rounding anywhere in this class.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, 3 * q must work
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "n" or "n/d" in base 10.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        if (q.get_den() == 0) {
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        }
        q.canonicalize();
        return Rational(std::move(q));
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    /// Exact integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e == 0) {
            return Rational(1);
        }
        if (is_zero() && e < 0) {
            throw std::domain_error("Rational: 0 raised to a negative power");
        }
        const unsigned long mag = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), mag);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), mag);
        // base is canonical, so n/d already is; a negative exponent just swaps them
        return e > 0 ? Rational(std::move(n), std::move(d)) : Rational(std::move(d), std::move(n));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational reciprocal() const {
        if (is_zero()) {
            throw std::domain_error("Rational: reciprocal of zero");
        }
        return Rational(den(), num());
    }

    /// "7/2" for non-integers, "7" when the denominator is one. Exact.
    std::string str() const {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Nearest double; the one place value leaves exact arithmetic.
    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational pow(const Rational& base, long e) { return base.pow(e); }

}  // namespace betasum

#endif
