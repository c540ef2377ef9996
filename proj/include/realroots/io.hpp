#ifndef REALROOTS_IO_HPP
#define REALROOTS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "realroots/polynomial.hpp"

namespace realroots {

// Text format: coefficients low-to-high, whitespace separated, each token
// "int" or "int/uint".  "2 -3 0 1" is x^3 - 3x + 2.  Round-trips exactly.
Polynomial parse_polynomial(const std::string& text);
std::string format_polynomial(const Polynomial& p);

// Human-readable form, e.g. "x^3 - 3*x + 2".
std::string pretty(const Polynomial& p);

struct CorpusLine {
    std::size_t line_number = 0;
    Polynomial poly;
};

struct CorpusParseIssue {
    std::size_t line_number = 0;
    std::string message;
};

struct Corpus {
    std::vector<CorpusLine> lines;
    std::vector<CorpusParseIssue> issues;
};

// One polynomial per line; '#' starts a comment; blank lines skipped.
// Malformed lines are reported in `issues` and skipped.
Corpus read_corpus(std::istream& in);

} // namespace realroots

#endif
