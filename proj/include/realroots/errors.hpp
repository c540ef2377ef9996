#ifndef REALROOTS_ERRORS_HPP
#define REALROOTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace realroots {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroPolynomial : Error {
    DivisionByZeroPolynomial() : Error("euclidean division by the zero polynomial") {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& what) : Error(what) {}
};

struct InvalidInterval : Error {
    explicit InvalidInterval(const std::string& what) : Error(what) {}
};

struct NotIsolating : Error {
    explicit NotIsolating(const std::string& what) : Error(what) {}
};

struct NotThreeRealRoots : Error {
    explicit NotThreeRealRoots(const std::string& what) : Error(what) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error(what) {}
};

// Raised when enclosure refinement exhausts its budget without separating
// two algebraic quantities whose exact equality could not be certified.
struct UnresolvableOrder : Error {
    explicit UnresolvableOrder(const std::string& what) : Error(what) {}
};

struct NotMonic : Error {
    explicit NotMonic(const std::string& what) : Error(what) {}
};

struct NotDepressed : Error {
    explicit NotDepressed(const std::string& what) : Error(what) {}
};

// A closed-form Sturm chain pivot vanished; the printed chain formulas do
// not apply.  `pivot` names the offending leading coefficient.
struct DegenerateChain : Error {
    std::string pivot;
    explicit DegenerateChain(std::string pivot_name)
        : Error("degenerate Sturm chain pivot: " + pivot_name), pivot(std::move(pivot_name)) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& what) : Error(what) {}
};

struct NegativeDelta2 : Error {
    explicit NegativeDelta2(const std::string& what) : Error(what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Global refinement budget: maximum bisection rounds spent on a single
// strict-inequality decision before UnresolvableOrder is raised.
int& max_refine_rounds();

} // namespace realroots

#endif
