#ifndef REALROOTS_ROOTS_HPP
#define REALROOTS_ROOTS_HPP

#include <array>
#include <vector>

#include "realroots/polynomial.hpp"
#include "realroots/rational.hpp"

namespace realroots {

// A real algebraic number: either an exact rational (lo == hi) or the unique
// root of a squarefree polynomial inside [lo, hi], where the polynomial has
// strictly opposite nonzero signs at the endpoints.
class RootEnclosure {
public:
    static RootEnclosure exact(Rational value);
    static RootEnclosure exact(Rational value, Polynomial defining);
    RootEnclosure(Polynomial squarefree_poly, Rational lo, Rational hi);

    bool is_exact() const { return lo_ == hi_; }
    const Rational& value() const;  // exact enclosures only
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    const Polynomial& poly() const { return poly_; }
    bool has_poly() const { return !poly_.is_zero(); }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    RatInterval bounds() const { return {lo_, hi_}; }

    void refine();  // one bisection step; no-op when exact
    void refine_below(const Rational& target_width);

    // Shift the represented number by a rational offset.
    RootEnclosure shifted(const Rational& offset) const;

private:
    RootEnclosure() = default;
    Polynomial poly_;  // zero polynomial when only an exact value is known
    Rational lo_, hi_;
    int sign_lo_ = 0;  // sign of poly_ at lo_ (when not exact)
};

// Exact sign of f at the algebraic number alpha.  Zero is certified through
// gcd(f, alpha.poly); nonzero signs by enclosure refinement.
int sign_at(const Polynomial& f, RootEnclosure& alpha);

// Exact three-way comparison of a rational against alpha: -1, 0, +1 for
// t < alpha, t == alpha, t > alpha.  Never refines.
int compare_with_rational(const Rational& t, RootEnclosure& alpha);

// Exact three-way comparison of two algebraic numbers (refines both as
// needed; equality certified through a shared gcd factor).
int compare(RootEnclosure& a, RootEnclosure& b);

// Current interval bounds of f evaluated over alpha's enclosure.
RatInterval value_bounds(const Polynomial& f, const RootEnclosure& alpha);

// Refine alpha until the evaluation interval of f over it is narrower than
// target_width (possible for any width > 0).
RatInterval value_bounds_refined(const Polynomial& f, RootEnclosure& alpha,
                                 const Rational& target_width);

struct RealRoot {
    RootEnclosure enclosure;
    int multiplicity = 1;
};

// All distinct real roots in ascending order; enclosures are defined by the
// squarefree part, multiplicities by repeated-gcd decomposition of source.
struct RootSet {
    Polynomial source;
    Polynomial squarefree;
    std::vector<RealRoot> roots;

    int count_distinct() const { return static_cast<int>(roots.size()); }
};

RootSet isolate_real_roots(const Polynomial& p);  // requires deg p >= 1

// Shrink an isolating interval below tol (absolute width), keeping the root.
// Throws NotIsolating when (lo, hi] does not isolate exactly one root.
RootEnclosure refine_root(const Polynomial& p, const Rational& lo, const Rational& hi,
                          const Rational& tol);

// The three ordered roots of x^3 + px + q under p < 0, -4p^3 - 27q^2 > 0.
// Seeded by the trigonometric closed form, certified by exact sign changes,
// with full exact isolation as fallback.
std::array<RootEnclosure, 3> cubic_roots_ordered(const Rational& p, const Rational& q);

// Cauchy bound: all real roots of p lie strictly inside (-bound, bound).
Rational root_bound(const Polynomial& p);

} // namespace realroots

#endif
