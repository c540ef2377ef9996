#ifndef REALROOTS_PARAMS_HPP
#define REALROOTS_PARAMS_HPP

#include "realroots/polynomial.hpp"
#include "realroots/rational.hpp"

namespace realroots {

// Parameters of the depressed quartic x^4 + 2p x^2 + 4q x + 4r.
struct QuarticParams {
    Rational p, q, r;
    Polynomial assemble() const;
    static QuarticParams disassemble(const Polynomial& poly);  // monic depressed quartic
};

// Parameters of the depressed quintic x^5 + (10p/3) x^3 + 10q x^2 + 20r x + 20s.
struct QuinticParams {
    Rational p, q, r, s;
    Polynomial assemble() const;
    static QuinticParams disassemble(const Polynomial& poly);  // monic depressed quintic
};

} // namespace realroots

#endif
