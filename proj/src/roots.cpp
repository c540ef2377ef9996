#include "realroots/roots.hpp"

#include <algorithm>
#include <cmath>

#include "realroots/errors.hpp"
#include "realroots/sturm.hpp"

namespace realroots {

RootEnclosure RootEnclosure::exact(Rational value) {
    RootEnclosure e;
    e.lo_ = value;
    e.hi_ = std::move(value);
    return e;
}

RootEnclosure RootEnclosure::exact(Rational value, Polynomial defining) {
    RootEnclosure e = exact(std::move(value));
    e.poly_ = std::move(defining);
    return e;
}

RootEnclosure::RootEnclosure(Polynomial squarefree_poly, Rational lo, Rational hi) {
    poly_ = std::move(squarefree_poly);
    lo_ = std::move(lo);
    hi_ = std::move(hi);
    if (!(lo_ < hi_)) throw InvalidInterval("root enclosure requires lo < hi");
    sign_lo_ = poly_(lo_).sign();
    const int sign_hi = poly_(hi_).sign();
    if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
        throw InvalidInterval("root enclosure requires opposite nonzero endpoint signs");
    }
}

const Rational& RootEnclosure::value() const {
    if (!is_exact()) throw Error("value() on a non-exact enclosure");
    return lo_;
}

void RootEnclosure::refine() {
    if (is_exact()) return;
    const Rational mid = midpoint();
    const int sign_mid = poly_(mid).sign();
    if (sign_mid == 0) {
        lo_ = mid;
        hi_ = mid;
        return;
    }
    if (sign_mid == sign_lo_) {
        lo_ = mid;
    } else {
        hi_ = mid;
    }
}

void RootEnclosure::refine_below(const Rational& target_width) {
    while (!is_exact() && width() >= target_width) refine();
}

RootEnclosure RootEnclosure::shifted(const Rational& offset) const {
    RootEnclosure e;
    e.lo_ = lo_ + offset;
    e.hi_ = hi_ + offset;
    e.sign_lo_ = sign_lo_;
    if (!poly_.is_zero()) e.poly_ = taylor_shift(poly_, -offset);
    return e;
}

namespace {

// True when h changes sign strictly across [lo, hi].
bool sign_change(const Polynomial& h, const Rational& lo, const Rational& hi) {
    return h(lo).sign() * h(hi).sign() < 0;
}

} // namespace

int sign_at(const Polynomial& f, RootEnclosure& alpha) {
    if (f.is_zero()) return 0;
    if (alpha.is_exact()) return f(alpha.value()).sign();
    if (f.degree() >= 1) {
        const Polynomial h = gcd(f, alpha.poly());
        // h divides alpha.poly, so it cannot vanish at the enclosure
        // endpoints; a sign change certifies f(alpha) == 0 exactly.
        if (h.degree() >= 1 && sign_change(h, alpha.lo(), alpha.hi())) return 0;
    }
    for (int round = 0; round <= max_refine_rounds(); ++round) {
        const RatInterval iv = f(alpha.bounds());
        const int s = iv.determined_sign();
        if (s != 0) return s;
        if (alpha.is_exact()) return f(alpha.value()).sign();
        alpha.refine();
    }
    throw UnresolvableOrder("sign_at: refinement budget exhausted");
}

int compare_with_rational(const Rational& t, RootEnclosure& alpha) {
    if (alpha.is_exact()) {
        if (t < alpha.value()) return -1;
        if (t > alpha.value()) return 1;
        return 0;
    }
    if (t <= alpha.lo()) return -1;
    if (t >= alpha.hi()) return 1;
    const int st = alpha.poly()(t).sign();
    if (st == 0) return 0;  // t is the unique root in the enclosure
    // Same sign as at lo means the root is still to the right of t.
    const int slo = alpha.poly()(alpha.lo()).sign();
    return st == slo ? -1 : 1;
}

int compare(RootEnclosure& a, RootEnclosure& b) {
    if (a.is_exact()) return -compare_with_rational(a.value(), b);
    if (b.is_exact()) return compare_with_rational(b.value(), a);
    bool equality_checked = false;
    for (int round = 0; round <= max_refine_rounds(); ++round) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        if (!equality_checked) {
            equality_checked = true;
            const Polynomial h = gcd(a.poly(), b.poly());
            if (h.degree() >= 1) {
                const Rational olo = std::max(a.lo(), b.lo());
                const Rational ohi = std::min(a.hi(), b.hi());
                // Any root of h inside the overlap is simultaneously the
                // unique root of both enclosures.
                if (olo < ohi && sign_change(h, olo, ohi)) return 0;
                if (olo == ohi && h(olo).is_zero()) return 0;
            }
        }
        a.refine();
        b.refine();
        if (a.is_exact()) return -compare_with_rational(a.value(), b);
        if (b.is_exact()) return compare_with_rational(b.value(), a);
    }
    throw UnresolvableOrder("compare: refinement budget exhausted");
}

RatInterval value_bounds(const Polynomial& f, const RootEnclosure& alpha) {
    return f(alpha.bounds());
}

RatInterval value_bounds_refined(const Polynomial& f, RootEnclosure& alpha,
                                 const Rational& target_width) {
    RatInterval iv = f(alpha.bounds());
    int rounds = 0;
    while (iv.width() >= target_width && !alpha.is_exact()) {
        alpha.refine();
        iv = f(alpha.bounds());
        if (++rounds > max_refine_rounds() * 4) {
            throw UnresolvableOrder("value_bounds_refined: refinement budget exhausted");
        }
    }
    return iv;
}

Rational root_bound(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeTooSmall("root bound requires degree >= 1");
    const Polynomial m = monic(p);
    Rational mx(0);
    for (int i = 0; i < m.degree(); ++i) {
        const Rational a = m.coeff(i).abs();
        if (a > mx) mx = a;
    }
    return Rational(1) + mx;
}

namespace {

struct Isolator {
    const Polynomial& sf;
    const SturmChain& chain;
    std::vector<RootEnclosure> out;

    int variations_at(const Rational& t) const {
        return sign_variations(chain, ExtendedRational(t)).variations;
    }

    // Emit all roots of sf in (lo, hi], in ascending order.
    void run(const Rational& lo, const Rational& hi, int vlo, int vhi) {
        const int count = vlo - vhi;
        if (count <= 0) return;
        if (count == 1) {
            if (sf(hi).is_zero()) {
                out.push_back(RootEnclosure::exact(hi, sf));
            } else {
                out.emplace_back(sf, lo, hi);
            }
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        if (sf(mid).is_zero()) {
            // Carve out a root-free gap around the exact root at mid.
            Rational delta = (hi - lo) / Rational(4);
            while (true) {
                const Rational l = mid - delta, r = mid + delta;
                if (!sf(l).is_zero() && !sf(r).is_zero() &&
                    variations_at(l) - variations_at(r) == 1) {
                    const int vl = variations_at(l), vr = variations_at(r);
                    run(lo, l, vlo, vl);
                    out.push_back(RootEnclosure::exact(mid, sf));
                    run(r, hi, vr, vhi);
                    return;
                }
                delta = delta / Rational(2);
            }
        }
        const int vmid = variations_at(mid);
        run(lo, mid, vlo, vmid);
        run(mid, hi, vmid, vhi);
    }
};

} // namespace

RootSet isolate_real_roots(const Polynomial& p) {
    if (p.degree() < 1) throw DegreeTooSmall("isolation requires degree >= 1");
    RootSet rs;
    rs.source = p;
    rs.squarefree = squarefree_part(p);
    const auto decomposition = squarefree_decomposition(p);

    std::vector<RootEnclosure> enclosures;
    if (rs.squarefree.degree() == 1) {
        enclosures.push_back(RootEnclosure::exact(
            -rs.squarefree.coeff(0) / rs.squarefree.coeff(1), rs.squarefree));
    } else {
        const SturmChain chain = sturm_chain(rs.squarefree);
        const Rational bound = root_bound(rs.squarefree);
        Isolator iso{rs.squarefree, chain, {}};
        iso.run(-bound, bound, iso.variations_at(-bound), iso.variations_at(bound));
        enclosures = std::move(iso.out);
    }

    rs.roots.reserve(enclosures.size());
    for (auto& enc : enclosures) {
        int mult = 1;
        if (decomposition.size() > 1 || decomposition[0].second != 1) {
            mult = 0;
            for (const auto& [factor, k] : decomposition) {
                bool hit;
                if (enc.is_exact()) {
                    hit = factor(enc.value()).is_zero();
                } else {
                    hit = sign_change(factor, enc.lo(), enc.hi());
                }
                if (hit) {
                    mult = k;
                    break;
                }
            }
            if (mult == 0) throw Error("isolation: root matches no squarefree factor");
        }
        rs.roots.push_back({std::move(enc), mult});
    }
    return rs;
}

RootEnclosure refine_root(const Polynomial& p, const Rational& lo, const Rational& hi,
                          const Rational& tol) {
    if (!(lo < hi)) throw NotIsolating("refine_root: empty interval");
    if (tol.sign() <= 0) throw InvalidInterval("refine_root: tol must be positive");
    const Polynomial sf = squarefree_part(p);
    if (sf(lo).is_zero()) {
        throw NotIsolating("refine_root: left endpoint is a root (half-open interval)");
    }
    if (count_real_roots(sf, ExtendedRational(lo), ExtendedRational(hi)) != 1) {
        throw NotIsolating("refine_root: interval does not isolate exactly one root");
    }
    if (sf(hi).is_zero()) return RootEnclosure::exact(hi, sf);
    RootEnclosure enc(sf, lo, hi);
    enc.refine_below(tol);
    return enc;
}

namespace {

// Exact dyadic rational from a double.
Rational rational_from_double(double x) {
    return Rational(mpq_class(x));
}

} // namespace

std::array<RootEnclosure, 3> cubic_roots_ordered(const Rational& p, const Rational& q) {
    if (p.sign() >= 0) {
        throw NotThreeRealRoots("cubic_roots_ordered requires p < 0");
    }
    const Rational disc = Rational(-4) * Rational::pow(p, 3) - Rational(27) * q * q;
    if (disc.sign() <= 0) {
        throw NotThreeRealRoots("cubic_roots_ordered requires -4p^3 - 27q^2 > 0");
    }
    const Polynomial f({q, p, Rational(0), Rational(1)});

    // Trigonometric seeds: roots are m*cos((theta - 2*pi*k)/3) with
    // m = 2*sqrt(-p/3) and cos(theta) = -q / (2*(-p/3)^(3/2)).
    const double pd = p.to_double(), qd = q.to_double();
    const double m = 2.0 * std::sqrt(-pd / 3.0);
    double c = -qd / (2.0 * std::pow(-pd / 3.0, 1.5));
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    std::array<double, 3> seeds = {
        m * std::cos(theta / 3.0),
        m * std::cos((theta - 2.0 * M_PI) / 3.0),
        m * std::cos((theta + 2.0 * M_PI) / 3.0),
    };
    std::sort(seeds.begin(), seeds.end());

    const double span = seeds[2] - seeds[0];
    for (double widen : {1e-9, 1e-6, 1e-3}) {
        const double w = std::max(span, 1.0) * widen;
        std::array<RootEnclosure, 3> out = {RootEnclosure::exact(0), RootEnclosure::exact(0),
                                            RootEnclosure::exact(0)};
        bool ok = true;
        Rational prev_hi;
        for (int k = 0; k < 3 && ok; ++k) {
            const Rational lo = rational_from_double(seeds[k] - w);
            const Rational hi = rational_from_double(seeds[k] + w);
            if (k > 0 && lo <= prev_hi) { ok = false; break; }
            const Rational flo = f(lo), fhi = f(hi);
            if (flo.is_zero() || fhi.is_zero() || flo.sign() == fhi.sign()) { ok = false; break; }
            out[static_cast<std::size_t>(k)] = RootEnclosure(f, lo, hi);
            prev_hi = hi;
        }
        // Three disjoint sign-change intervals of a cubic isolate all roots.
        if (ok) return out;
    }

    // Nearly coincident roots or extreme coefficients: fall back to exact
    // isolation.
    RootSet rs = isolate_real_roots(f);
    if (rs.count_distinct() != 3) throw Error("cubic_roots_ordered: expected three roots");
    return {rs.roots[0].enclosure, rs.roots[1].enclosure, rs.roots[2].enclosure};
}

} // namespace realroots
