#include <cctype>
#include <string>

#include "ggb/polynomial.hpp"

namespace ggb {
namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const CoeffDomain& domain, int nvars)
        : text_(text), domain_(domain), nvars_(nvars) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (eof()) fail("expected a polynomial");
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = peek() == '-';
            ++pos_;
        }
        for (;;) {
            terms.push_back(parse_term(negate));
            skip_ws();
            if (eof()) break;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
            } else {
                fail("expected '+' or '-' between terms");
            }
        }
        return Polynomial(domain_, nvars_, std::move(terms));
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Scalar parse_coefficient() {
        std::string num = read_digits();
        if (domain_.is_rationals() && !eof() && peek() == '/') {
            ++pos_;
            std::string den = read_digits();
            if (mpz_class(den) == 0) fail("zero denominator");
            return Scalar::from_rational(mpq_class(num + "/" + den));
        }
        return Scalar::parse(num, domain_);
    }

    int parse_exponent() {
        std::size_t at = pos_;
        std::string digits = read_digits();
        if (digits.size() > 6) throw ParseError("exponent too large", at);
        return std::stoi(digits);
    }

    // One variable power: x, y, x3, x^2, ...
    void parse_factor(std::vector<int>& exps) {
        std::size_t at = pos_;
        if (eof() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a variable");
        std::string name(1, peek());
        ++pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            name += peek();
            ++pos_;
        }
        int index = -1;
        if (nvars_ == 2) {
            if (name == "x") index = 0;
            else if (name == "y") index = 1;
        } else if (name.size() > 1 && name[0] == 'x') {
            int k = std::stoi(name.substr(1));
            if (k >= 1 && k <= nvars_) index = k - 1;
        }
        if (index < 0)
            throw ParseError("unknown variable '" + name + "' in " +
                                 std::to_string(nvars_) + "-variable ring",
                             at);
        int e = 1;
        if (!eof() && peek() == '^') {
            ++pos_;
            e = parse_exponent();
        }
        exps[static_cast<std::size_t>(index)] += e;
    }

    Term parse_term(bool negate) {
        skip_ws();
        if (eof()) fail("expected a term");
        Scalar coeff = Scalar::one(domain_);
        std::vector<int> exps(static_cast<std::size_t>(nvars_), 0);
        bool saw_monomial = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                parse_factor(exps);
                saw_monomial = true;
            }
        } else {
            parse_factor(exps);
            saw_monomial = true;
        }
        while (saw_monomial) {
            skip_ws();
            if (eof() || peek() != '*') break;
            ++pos_;
            skip_ws();
            parse_factor(exps);
        }
        if (negate) coeff = -coeff;
        return Term{coeff, Monomial(std::move(exps))};
    }

    std::string_view text_;
    CoeffDomain domain_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const CoeffDomain& domain,
                            int nvars) {
    // "0" (possibly padded) is the zero polynomial; the grammar otherwise
    // never produces it, since zero terms are dropped by normalization.
    return PolyParser(text, domain, nvars).parse();
}

} // namespace ggb
