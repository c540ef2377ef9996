#include "realroots/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "realroots/errors.hpp"

namespace realroots {

namespace {

bool valid_rational_token(const std::string& tok) {
    // int or int/uint
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == tok.size()) return true;
    if (tok[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) { ++i; ++digits; }
    return digits > 0 && i == tok.size();
}

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    while (pos < n) {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= n) break;
        std::size_t start = pos;
        while (pos < n && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        const std::string tok = text.substr(start, pos - start);
        if (!valid_rational_token(tok)) {
            throw ParseError("bad coefficient '" + tok + "'", start);
        }
        coeffs.push_back(Rational::from_string(tok));
    }
    if (coeffs.empty()) throw ParseError("no coefficients", 0);
    return Polynomial(std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) out += ' ';
        out += p.coeff(i).str();
    }
    return out;
}

std::string pretty(const Polynomial& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

Corpus read_corpus(std::istream& in) {
    Corpus corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
        }
        if (blank) continue;
        try {
            corpus.lines.push_back({lineno, parse_polynomial(line)});
        } catch (const ParseError& e) {
            corpus.issues.push_back({lineno, e.what()});
        }
    }
    return corpus;
}

} // namespace realroots
