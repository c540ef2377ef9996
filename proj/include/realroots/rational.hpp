#ifndef REALROOTS_RATIONAL_HPP
#define REALROOTS_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace realroots {

// Exact rational number on top of GMP.  Always canonical: reduced, positive
// denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    static Rational from_string(const std::string& text);  // "a" or "a/b"

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational reciprocal() const;

    mpz_class floor() const;
    mpz_class ceil() const;

    // Exact square root if this is the square of a rational, nullopt otherwise.
    std::optional<Rational> exact_sqrt() const;

    static Rational pow(const Rational& base, unsigned exp);

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Closed interval with exact rational endpoints, lo <= hi.
struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rational& v) { return {v, v}; }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    // Sign if determined: +1 when lo > 0, -1 when hi < 0, 0 otherwise.
    int determined_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rational& k, const RatInterval& a);
RatInterval operator+(const RatInterval& a, const Rational& k);
RatInterval operator-(const RatInterval& a);

// Enclosure of sqrt(v) with width <= tol; exact point interval when v is a
// rational square.  Requires v >= 0.
RatInterval sqrt_enclosure(const Rational& v, const Rational& tol);

// Outward enclosure of sqrt over a nonnegative interval.
RatInterval sqrt_enclosure(const RatInterval& v, const Rational& tol);

// The rational with smallest denominator (ties: smallest numerator) inside
// the closed interval [lo, hi], lo <= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

} // namespace realroots

#endif
