#include "realroots/polynomial.hpp"

#include <ostream>

#include "realroots/errors.hpp"

namespace realroots {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::monomial(int k, const Rational& coeff) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::lc() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatInterval Polynomial::operator()(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + RatInterval::point(*it);
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& k, const Polynomial& p) {
    if (k.is_zero()) return Polynomial::zero();
    std::vector<Rational> c;
    c.reserve(p.c_.size());
    for (const auto& v : p.c_) c.push_back(k * v);
    return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return Polynomial::zero();
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) {
        c.push_back(Rational(i) * p.coeff(i));
    }
    return Polynomial(std::move(c));
}

Polynomial antiderivative(const Polynomial& p) {
    if (p.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 2, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        c[static_cast<std::size_t>(i) + 1] = p.coeff(i) / Rational(i + 1);
    }
    return Polynomial(std::move(c));
}

DivResult euclid_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroPolynomial();
    if (a.degree() < b.degree()) return {Polynomial::zero(), a};
    std::vector<Rational> rem(a.coeffs());
    const int db = b.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational& blc = b.lc();
    for (int i = a.degree(); i >= db; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        const Rational q = top / blc;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
        }
    }
    rem.resize(static_cast<std::size_t>(db >= 0 ? db : 0));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    DivResult d = euclid_div(a, b);
    if (!d.remainder.is_zero()) throw Error("divide_exact: nonzero remainder");
    return d.quotient;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) throw Error("monic normalization of the zero polynomial");
    if (p.is_monic()) return p;
    return p.lc().reciprocal() * p;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        Polynomial r = euclid_div(u, v).remainder;
        u = std::move(v);
        v = std::move(r);
    }
    return monic(u);
}

Polynomial taylor_shift(const Polynomial& p, const Rational& t) {
    if (p.is_zero() || t.is_zero()) return p;
    // Repeated synthetic division by (x - (-t)) accumulates the coefficients
    // of p(x + t) in place.
    std::vector<Rational> c(p.coeffs());
    const int n = p.degree();
    for (int k = 0; k < n; ++k) {
        for (int i = n - 1; i >= k; --i) {
            c[static_cast<std::size_t>(i)] += t * c[static_cast<std::size_t>(i) + 1];
        }
    }
    return Polynomial(std::move(c));
}

DepressedForm depress(const Polynomial& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeTooSmall("depress requires degree >= 2");
    Polynomial m = monic(p);
    const Rational shift = m.coeff(n - 1) / Rational(n);
    return {taylor_shift(m, -shift), shift};
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    Polynomial u = a, v = b;
    Rational acc(1);
    while (true) {
        if (v.degree() == 0) {
            return acc * Rational::pow(v.lc(), static_cast<unsigned>(u.degree()));
        }
        Polynomial r = euclid_div(u, v).remainder;
        if (r.is_zero()) return Rational(0);
        const unsigned du = static_cast<unsigned>(u.degree());
        const unsigned dv = static_cast<unsigned>(v.degree());
        const unsigned dr = static_cast<unsigned>(r.degree() < 0 ? 0 : r.degree());
        acc *= Rational::pow(v.lc(), du - dr);
        if ((du * dv) % 2 == 1) acc = -acc;
        u = std::move(v);
        v = std::move(r);
    }
}

Rational discriminant(const Polynomial& p) {
    const int n = p.degree();
    if (n < 2) throw DegreeTooSmall("discriminant requires degree >= 2");
    Rational res = resultant(p, derivative(p));
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) res = -res;
    return res / p.lc();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeTooSmall("squarefree decomposition requires degree >= 1");
    std::vector<std::pair<Polynomial, int>> out;
    const Polynomial m = monic(p);
    const Polynomial dm = derivative(m);
    Polynomial g = gcd(m, dm);
    if (g.degree() == 0) {
        out.emplace_back(m, 1);
        return out;
    }
    // Yun's algorithm.
    Polynomial w = divide_exact(m, g);
    Polynomial y = divide_exact(dm, g);
    Polynomial z = y - derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        Polynomial h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = divide_exact(w, h);
        if (w.degree() == 0) break;
        y = z.is_zero() ? Polynomial::zero() : divide_exact(z, h);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeTooSmall("squarefree part requires degree >= 1");
    const Polynomial m = monic(p);
    Polynomial g = gcd(m, derivative(m));
    if (g.degree() == 0) return m;
    return monic(divide_exact(m, g));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        const Rational a = c.abs();
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

} // namespace realroots
