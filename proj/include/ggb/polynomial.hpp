#ifndef GGB_POLYNOMIAL_HPP
#define GGB_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ggb/monomial.hpp"
#include "ggb/scalar.hpp"

namespace ggb {

struct Term {
    Scalar coeff;
    Monomial mono;
};

// Term list kept strictly descending under grevlex, no zero coefficients,
// no repeated monomials. The zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial(const CoeffDomain& domain, int nvars);
    Polynomial(const CoeffDomain& domain, int nvars, std::vector<Term> terms);

    static Polynomial zero(const CoeffDomain& domain, int nvars) {
        return Polynomial(domain, nvars);
    }
    static Polynomial constant(const CoeffDomain& domain, int nvars, const Scalar& c);
    static Polynomial from_term(const CoeffDomain& domain, const Scalar& c,
                                const Monomial& m);

    const CoeffDomain& domain() const { return domain_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;             // ZeroPolynomial on 0
    const Monomial& leading_monomial() const;     // ZeroPolynomial on 0
    const Scalar& leading_coefficient() const;    // ZeroPolynomial on 0
    int degree() const;                           // ZeroPolynomial on 0
    bool is_homogeneous() const;                  // zero counts as homogeneous

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& s) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial times_term(const Term& t) const;
    Polynomial monic() const;                     // ZeroPolynomial on 0

    // Coefficient of m (zero scalar if absent).
    Scalar coefficient_of(const Monomial& m) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const; // canonical text form, "0" for zero

private:
    void normalize();
    void check_compatible(const Polynomial& o) const;

    CoeffDomain domain_;
    int nvars_;
    std::vector<Term> terms_;
};

struct DivisionResult {
    std::vector<Polynomial> quotients; // one per divisor, in order
    Polynomial remainder;
};

// Classical multivariate division: f = sum q_i g_i + remainder, divisors
// tried strictly in list order, no remainder term divisible by any LM(g_i).
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Parse the canonical text grammar: terms `c*x^a*y^b` joined by +/-, with
// `^1`, unit coefficients and the unit monomial elided. Round-trips with
// Polynomial::to_string byte-exactly.
Polynomial parse_polynomial(std::string_view text, const CoeffDomain& domain,
                            int nvars);

} // namespace ggb

#endif
