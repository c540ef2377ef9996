#ifndef REALROOTS_STURM_HPP
#define REALROOTS_STURM_HPP

#include <vector>

#include "realroots/params.hpp"
#include "realroots/polynomial.hpp"

namespace realroots {

// A rational extended with the two infinities, for evaluation points.
class ExtendedRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
    ExtendedRational(int v) : ExtendedRational(Rational(v)) {}                   // NOLINT
    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rational& value() const { return value_; }

    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_;
};

// Sign of p at a point, using leading-coefficient/degree parity at infinity.
int sign_at_point(const Polynomial& p, const ExtendedRational& x);

// Chain of a polynomial with its derivative and successive negated euclidean
// remainders.  Degrees strictly decrease; the chain stops at the last nonzero
// element.  `complete` is true when that element is a nonzero constant
// (equivalently gcd(p, p') is constant, i.e. p is squarefree); otherwise the
// chain terminated early at a nonconstant gcd.
struct SturmChain {
    Polynomial source;
    std::vector<Polynomial> seq;  // seq[0] = p, seq[1] = p', ...
    bool complete = false;

    bool squarefree() const { return complete; }
};

SturmChain sturm_chain(const Polynomial& p);  // requires deg p >= 1

struct SignSequence {
    std::vector<int> signs;  // in {-1, 0, +1}, one per chain element
    int variations = 0;      // adjacent sign changes with zeros removed
};

SignSequence sign_variations(const SturmChain& chain, const ExtendedRational& x);

// Number of distinct real roots of p in the half-open interval (a, b].
// Multiplicities are ignored (the count is taken on the squarefree part).
int count_real_roots(const Polynomial& p, const ExtendedRational& a, const ExtendedRational& b);
int count_real_roots(const Polynomial& p);  // all of the real line

// Leading-coefficient test: a monic polynomial of degree n has n distinct
// real roots iff its Sturm chain has n+1 elements whose leading coefficients
// are all strictly positive.  Non-monic input is normalized first.
bool all_real_rooted_sturm(const Polynomial& p);

// The closed-form chain conditions for the depressed quintic:
//   p < 0,  8p^3 + 81q^2 - 48pr < 0,  a_s1 < 0,  disc > 0.
// Throws DegenerateChain when a pivot leading coefficient vanishes (p,
// 8p^3 - 48pr + 81q^2, or a_s1), since the closed forms divide by them.
struct QuinticSturmReport {
    bool p_negative = false;
    bool quadratic_pivot_negative = false;  // 8p^3 + 81q^2 - 48pr < 0
    bool a_s1_negative = false;
    bool disc_positive = false;
    Rational a_s1, b_s1, disc;

    bool all_real() const {
        return p_negative && quadratic_pivot_negative && a_s1_negative && disc_positive;
    }
};

QuinticSturmReport quintic_sturm_conditions(const QuinticParams& params);

} // namespace realroots

#endif
