#ifndef REALROOTS_INTERLACE_HPP
#define REALROOTS_INTERLACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "realroots/polynomial.hpp"
#include "realroots/roots.hpp"

namespace realroots {

// For a monic depressed P of degree n the euclidean quotient of P by
// P'/n is exactly x, so P(x) = x*(P'(x)/n) - remainder(x) with
// deg remainder <= n-2.  remainder0 drops the constant term:
// remainder0 = remainder + a0, where a0 is the constant term of P.
struct RemainderDecomposition {
    Polynomial p;           // the source polynomial
    Polynomial p_prev;      // P'/n
    Polynomial remainder;   // x*p_prev - p
    Polynomial remainder0;  // remainder + a0
    Rational a0;            // constant term of p
};

// Requires monic, depressed, deg >= 2.
RemainderDecomposition decompose(const Polynomial& p);

struct InterlaceResult {
    bool weak = false;    // alpha_1 <= beta_1 <= alpha_2 <= ...
    bool strict = false;  // all inequalities strict
};

// Requires |outer| == |inner| + 1 (SizeMismatch otherwise); refines the
// enclosures as needed, certifying any coincidences exactly.
InterlaceResult is_interlaced(RootSet& outer, RootSet& inner);

enum class CheckResult { Fail, Pass, Boundary };

// True when root index k (1-based among the n-1 critical roots, ascending)
// belongs to the set where the remainder must be positive (equivalently
// where the admissible constant lies below the remainder0 value).
bool upper_side(int k, int n);

// Sign-alternation criterion: the remainder r evaluated at the n-1 ordered
// roots of P'/n must be negative on the lower-side indices and positive on
// the upper-side ones.  A certified zero is reported as Boundary.
CheckResult sign_alternation_check(const Polynomial& r, RootSet& critical_roots, int n);

struct IntervalEndpoint {
    RatInterval bounds;  // enclosure of the endpoint value
    bool exact = false;
};

enum class IntervalStatus {
    NonEmpty,  // sup < inf certified
    Point,     // sup == inf exactly (boundary of the admissible region)
    Empty,     // sup > inf certified
    Boundary,  // the defining roots are not all real distinct
};

// Open admissible interval for a level constant; endpoints are algebraic
// numbers tracked by enclosures.
struct Interval {
    IntervalStatus status = IntervalStatus::Empty;
    IntervalEndpoint lo, hi;
    // Point: the collapse value; Boundary: values at the multiple roots.
    std::vector<IntervalEndpoint> collapse_values;

    bool nonempty() const { return status == IntervalStatus::NonEmpty; }
};

// Admissible open interval for the constant term when extending p_prev
// (monic, depressed, all real distinct roots) to degree `level`:
// evaluates remainder0 = x*p_prev - level*antiderivative(p_prev) at the
// roots of p_prev and takes the parity sup/inf.  Endpoint enclosures are
// refined below endpoint_width.  Throws PreconditionFailed when p_prev does
// not have deg p_prev distinct real roots.
Interval a0_interval(const Polynomial& p_prev, int level, const Rational& endpoint_width);

enum class Verdict { AllRealDistinct, NotAllReal, Degenerate, HypothesisUnresolved };
enum class DegenerateKind { Simple, OneDouble, TwoDoubles, Triple, TripleAndDouble, Other };

struct MultiplicityProfile {
    std::vector<RealRoot> roots;          // real roots ascending, with multiplicities
    std::map<int, int> counts;            // multiplicity -> number of real roots
    DegenerateKind kind = DegenerateKind::Simple;
    bool has_complex_multiple = false;    // a repeated factor with non-real roots
};

// Exact classification from squarefree decomposition.
MultiplicityProfile detect_degenerate(const Polynomial& p);

enum class LevelDecision { Inside, Boundary, Outside, GateFailed, GateBoundary };

struct LevelRecord {
    int level = 0;                            // degree of the polynomial checked
    Rational constant;                        // its constant term
    std::vector<RatInterval> critical_roots;  // enclosures of the P_{level-1} roots
    std::vector<int> remainder_signs;         // sign of remainder at each root
    std::optional<Interval> admissible;       // filled when recording intervals
    LevelDecision decision = LevelDecision::Inside;
};

struct CertifyOptions {
    bool record_intervals = true;             // compute per-level admissible intervals
    Rational interval_width = Rational(1, 1024);
};

struct Certificate {
    Verdict verdict = Verdict::NotAllReal;
    Rational scale;   // original(x) == scale * depressed(x + shift)
    Rational shift;
    std::optional<MultiplicityProfile> profile;  // roots in original coordinates
    std::vector<LevelRecord> trail;
    int unresolved_level = -1;                   // for HypothesisUnresolved
};

// Full recursive certification.  The input is normalized (monic + depressed)
// first; the certificate records the transform.  Requires deg >= 2.
Certificate certify_all_real(const Polynomial& p, const CertifyOptions& opts = {});

// Monic polynomial whose roots are f(beta) over all complex roots beta of
// the monic polynomial g (computed as the characteristic polynomial of f
// evaluated at the companion matrix of g).
Polynomial value_char_poly(const Polynomial& f, const Polynomial& g);

// Exact three-way comparison of f(a) against f(b), where a and b enclose
// distinct roots of the squarefree monic g.  Equality is certified via the
// multiple roots of value_char_poly(f, g).
int compare_values(const Polynomial& f, RootEnclosure& a, RootEnclosure& b, const Polynomial& g);

} // namespace realroots

#endif
