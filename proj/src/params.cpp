#include "realroots/params.hpp"

#include "realroots/errors.hpp"

namespace realroots {

Polynomial QuarticParams::assemble() const {
    return Polynomial({Rational(4) * r, Rational(4) * q, Rational(2) * p, Rational(0), Rational(1)});
}

QuarticParams QuarticParams::disassemble(const Polynomial& poly) {
    if (poly.degree() != 4) throw DegreeTooSmall("quartic parameters require degree 4");
    if (!poly.is_monic()) throw NotMonic("quartic parameters require a monic polynomial");
    if (!poly.coeff(3).is_zero()) throw NotDepressed("quartic parameters require a depressed polynomial");
    return {poly.coeff(2) / Rational(2), poly.coeff(1) / Rational(4), poly.coeff(0) / Rational(4)};
}

Polynomial QuinticParams::assemble() const {
    return Polynomial({Rational(20) * s, Rational(20) * r, Rational(10) * q,
                       Rational(10, 3) * p, Rational(0), Rational(1)});
}

QuinticParams QuinticParams::disassemble(const Polynomial& poly) {
    if (poly.degree() != 5) throw DegreeTooSmall("quintic parameters require degree 5");
    if (!poly.is_monic()) throw NotMonic("quintic parameters require a monic polynomial");
    if (!poly.coeff(4).is_zero()) throw NotDepressed("quintic parameters require a depressed polynomial");
    return {Rational(3, 10) * poly.coeff(3), poly.coeff(2) / Rational(10),
            poly.coeff(1) / Rational(20), poly.coeff(0) / Rational(20)};
}

} // namespace realroots
