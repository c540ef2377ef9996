#include "realroots/sturm.hpp"

#include "realroots/errors.hpp"

namespace realroots {

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if (a.kind() == K::NegInf) return b.kind() != K::NegInf;
    if (a.kind() == K::PosInf) return false;
    if (b.kind() == K::PosInf) return true;
    if (b.kind() == K::NegInf) return false;
    return a.value() < b.value();
}

int sign_at_point(const Polynomial& p, const ExtendedRational& x) {
    if (p.is_zero()) return 0;
    switch (x.kind()) {
        case ExtendedRational::Kind::Finite:
            return p(x.value()).sign();
        case ExtendedRational::Kind::PosInf:
            return p.lc().sign();
        case ExtendedRational::Kind::NegInf:
            return p.degree() % 2 == 0 ? p.lc().sign() : -p.lc().sign();
    }
    return 0;
}

SturmChain sturm_chain(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeTooSmall("sturm chain requires degree >= 1");
    SturmChain chain;
    chain.source = p;
    chain.seq.push_back(p);
    chain.seq.push_back(derivative(p));
    while (true) {
        const Polynomial& a = chain.seq[chain.seq.size() - 2];
        const Polynomial& b = chain.seq.back();
        Polynomial r = euclid_div(a, b).remainder;
        if (r.is_zero()) break;
        chain.seq.push_back(-r);
    }
    chain.complete = chain.seq.back().degree() == 0;
    return chain;
}

SignSequence sign_variations(const SturmChain& chain, const ExtendedRational& x) {
    SignSequence out;
    out.signs.reserve(chain.seq.size());
    int prev = 0;
    for (const Polynomial& s : chain.seq) {
        const int sg = sign_at_point(s, x);
        out.signs.push_back(sg);
        if (sg != 0) {
            if (prev != 0 && sg != prev) ++out.variations;
            prev = sg;
        }
    }
    return out;
}

int count_real_roots(const Polynomial& p, const ExtendedRational& a, const ExtendedRational& b) {
    if (!(a < b)) throw InvalidInterval("count_real_roots requires a < b");
    if (p.is_zero()) throw Error("count_real_roots on the zero polynomial");
    if (p.degree() < 1) return 0;
    const SturmChain chain = sturm_chain(squarefree_part(p));
    return sign_variations(chain, a).variations - sign_variations(chain, b).variations;
}

int count_real_roots(const Polynomial& p) {
    return count_real_roots(p, ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

bool all_real_rooted_sturm(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) throw DegreeTooSmall("all_real_rooted_sturm requires degree >= 1");
    const SturmChain chain = sturm_chain(monic(p));
    // A full chain has degrees n, n-1, ..., 0; anything shorter (early gcd
    // termination or a degree skip) cannot certify n distinct real roots.
    if (chain.seq.size() != static_cast<std::size_t>(n) + 1) return false;
    for (const Polynomial& s : chain.seq) {
        if (s.lc().sign() <= 0) return false;
    }
    return true;
}

QuinticSturmReport quintic_sturm_conditions(const QuinticParams& params) {
    const Rational &p = params.p, &q = params.q, &r = params.r, &s = params.s;
    if (p.is_zero()) throw DegenerateChain("p");
    const Rational quad_pivot = Rational(8) * p * p * p + Rational(81) * q * q - Rational(48) * p * r;
    if (quad_pivot.is_zero()) throw DegenerateChain("8p^3 - 48pr + 81q^2");

    QuinticSturmReport rep;
    rep.a_s1 = Rational(-80) * Rational::pow(p, 4) * r
             - Rational(2106) * q * q * p * r
             + Rational(1056) * p * p * r * r
             - Rational(3456) * Rational::pow(r, 3)
             + Rational(240) * p * p * q * s
             + Rational(3240) * q * s * r
             + Rational(40) * Rational::pow(p, 3) * q * q
             + Rational(729) * Rational::pow(q, 4)
             - Rational(450) * p * s * s;
    if (rep.a_s1.is_zero()) throw DegenerateChain("a_s1");
    rep.b_s1 = Rational(-120) * Rational::pow(p, 4) * s
             - Rational(1755) * s * p * q * q
             + Rational(1560) * p * p * r * s
             - Rational(4320) * r * r * s
             + Rational(40) * Rational::pow(p, 3) * q * r
             + Rational(729) * Rational::pow(q, 3) * r
             - Rational(864) * q * p * r * r
             + Rational(2025) * s * s * q;
    rep.disc = discriminant(params.assemble());

    rep.p_negative = p.sign() < 0;
    rep.quadratic_pivot_negative = quad_pivot.sign() < 0;
    rep.a_s1_negative = rep.a_s1.sign() < 0;
    rep.disc_positive = rep.disc.sign() > 0;
    return rep;
}

} // namespace realroots
