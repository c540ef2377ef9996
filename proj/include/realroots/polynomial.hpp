#ifndef REALROOTS_POLYNOMIAL_HPP
#define REALROOTS_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "realroots/rational.hpp"

namespace realroots {

// Dense univariate polynomial with exact rational coefficients.
// Canonical form: no trailing zero coefficients; the zero polynomial stores
// an empty coefficient vector and reports degree() == -1 (standing in for
// degree minus infinity).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial zero() { return {}; }
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int k, const Rational& coeff = Rational(1));
    // x^1 convenience
    static Polynomial x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    // Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const Rational& lc() const;  // leading coefficient; nonzero polynomial only
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;   // Horner evaluation
    RatInterval operator()(const RatInterval& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& k, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial derivative(const Polynomial& p);

// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

struct DivResult {
    Polynomial quotient;
    Polynomial remainder;
};

// Exact euclidean division: a = quotient*b + remainder, deg remainder < deg b.
// Throws DivisionByZeroPolynomial when b is zero.
DivResult euclid_div(const Polynomial& a, const Polynomial& b);

// Quotient of an exact division (remainder must vanish).
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

Polynomial monic(const Polynomial& p);

// Monic greatest common divisor; constant 1 for coprime inputs.
// Requires not both inputs zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p composed with x + t, i.e. the polynomial q with q(x) = p(x + t).
Polynomial taylor_shift(const Polynomial& p, const Rational& t);

// Monic polynomial with vanishing second-highest coefficient, plus the exact
// substitution offset: original(x) = lc * poly(x + shift).
struct DepressedForm {
    Polynomial poly;
    Rational shift;
};

// Requires deg p >= 2 (DegreeTooSmall otherwise).
DepressedForm depress(const Polynomial& p);

// Resultant via the euclidean remainder sequence.
Rational resultant(const Polynomial& a, const Polynomial& b);

// disc(p) = (-1)^(n(n-1)/2) * resultant(p, p') / lc(p); requires deg p >= 2.
// Zero exactly when p has a multiple complex root.
Rational discriminant(const Polynomial& p);

// Yun squarefree decomposition of the monic normalization:
// monic(p) = prod f_i^i over the returned (f_i, i), each f_i monic squarefree,
// pairwise coprime, deg f_i >= 1.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Monic product of the distinct irreducible factors (roots with multiplicity 1).
Polynomial squarefree_part(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace realroots

#endif
