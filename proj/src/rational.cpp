#include "realroots/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "realroots/errors.hpp"

namespace realroots {

int& max_refine_rounds() {
    static int budget = 256;
    return budget;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    return Rational(1) / *this;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    const mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

Rational Rational::pow(const Rational& base, unsigned exp) {
    Rational acc(1), b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return {lo, hi};
}

RatInterval operator*(const Rational& k, const RatInterval& a) {
    if (k.sign() >= 0) return {k * a.lo, k * a.hi};
    return {k * a.hi, k * a.lo};
}

RatInterval operator+(const RatInterval& a, const Rational& k) {
    return {a.lo + k, a.hi + k};
}

RatInterval operator-(const RatInterval& a) {
    return {-a.hi, -a.lo};
}

RatInterval sqrt_enclosure(const Rational& v, const Rational& tol) {
    if (v.sign() < 0) throw Error("sqrt of negative rational");
    if (auto exact = v.exact_sqrt()) return RatInterval::point(*exact);
    // sqrt(a/b) = sqrt(a*b)/b.  Scale by 4^k so the integer sqrt resolves
    // the value to width 1/(b*2^k) <= tol.
    const mpz_class a = v.num(), b = v.den();
    mpz_class scale(1);  // 2^k
    Rational width(mpz_class(1), b);
    while (width > tol) {
        scale <<= 8;
        width /= Rational(256);
    }
    mpz_class m = a * b * scale * scale;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    const mpz_class denom = b * scale;
    return {Rational(s, denom), Rational(s + 1, denom)};
}

RatInterval sqrt_enclosure(const RatInterval& v, const Rational& tol) {
    if (v.lo.sign() < 0) throw Error("sqrt of interval with negative lower bound");
    return {sqrt_enclosure(v.lo, tol).lo, sqrt_enclosure(v.hi, tol).hi};
}

namespace {

// Stern-Brocot style search over nonnegative bounds 0 <= lo <= hi.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    const mpz_class fl = lo.floor();
    if (Rational(fl, 1) == lo) return lo;          // lo itself integral
    if (Rational(fl + 1, 1) <= hi) return Rational(fl + 1, 1);
    // Same integer part; recurse on the fractional parts, flipped.
    const Rational flo = lo - Rational(fl, 1);
    const Rational fhi = hi - Rational(fl, 1);
    const Rational inner = simplest_nonneg(fhi.reciprocal(), flo.reciprocal());
    return Rational(fl, 1) + inner.reciprocal();
}

} // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw InvalidInterval("simplest_rational_in: lo > hi");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_nonneg(-hi, -lo);
    return simplest_nonneg(lo, hi);
}

} // namespace realroots
