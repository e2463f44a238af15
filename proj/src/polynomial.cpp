#include "ggb/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace ggb {

Polynomial::Polynomial(const CoeffDomain& domain, int nvars)
    : domain_(domain), nvars_(nvars) {
    if (nvars < 1) throw ArityMismatch("polynomial ring needs at least one variable");
}

Polynomial::Polynomial(const CoeffDomain& domain, int nvars, std::vector<Term> terms)
    : domain_(domain), nvars_(nvars), terms_(std::move(terms)) {
    if (nvars < 1) throw ArityMismatch("polynomial ring needs at least one variable");
    for (const Term& t : terms_) {
        if (t.mono.nvars() != nvars_)
            throw ArityMismatch("term arity " + std::to_string(t.mono.nvars()) +
                                " in " + std::to_string(nvars_) + "-variable ring");
        if (t.coeff.domain() != domain_)
            throw DomainMismatch("term coefficient domain differs from ring domain");
    }
    normalize();
}

Polynomial Polynomial::constant(const CoeffDomain& domain, int nvars, const Scalar& c) {
    return Polynomial(domain, nvars, {Term{c, Monomial::one(nvars)}});
}

Polynomial Polynomial::from_term(const CoeffDomain& domain, const Scalar& c,
                                 const Monomial& m) {
    return Polynomial(domain, m.nvars(), {Term{c, m}});
}

void Polynomial::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return grevlex_greater(a.mono, b.mono);
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (Term& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
#ifndef NDEBUG
    for (std::size_t i = 1; i < terms_.size(); ++i)
        assert(grevlex_greater(terms_[i - 1].mono, terms_[i].mono));
#endif
}

const Term& Polynomial::leading_term() const {
    if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading term");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const {
    return leading_term().mono;
}

const Scalar& Polynomial::leading_coefficient() const {
    return leading_term().coeff;
}

int Polynomial::degree() const {
    if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
    return terms_.front().mono.degree(); // grevlex is degree-compatible
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    const int d = terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (domain_ != o.domain_)
        throw DomainMismatch("polynomial domains differ: " + domain_.to_string() +
                             " vs " + o.domain_.to_string());
    if (nvars_ != o.nvars_)
        throw ArityMismatch("polynomial variable counts differ: " +
                            std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    // Merge of two strictly descending term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto ord = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (ord == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (ord == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back(Term{c, terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(domain_, nvars_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(domain_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{-t.coeff, t.mono});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const Scalar& s) const {
    if (s.domain() != domain_)
        throw DomainMismatch("scaling coefficient from a different domain");
    Polynomial r(domain_, nvars_);
    if (s.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * s, t.mono});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    if (m.nvars() != nvars_) throw ArityMismatch("monomial arity mismatch");
    Polynomial r(domain_, nvars_);
    r.terms_.reserve(terms_.size());
    // Multiplication by a fixed monomial preserves grevlex order.
    for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff, t.mono * m});
    return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
    return times_monomial(t.mono).scaled(t.coeff);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> cross;
    cross.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            cross.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
    return Polynomial(domain_, nvars_, std::move(cross));
}

Polynomial Polynomial::monic() const {
    return scaled(leading_coefficient().inverse());
}

Scalar Polynomial::coefficient_of(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(domain_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (domain_ != o.domain_ || nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    for (const Polynomial& g : divisors)
        if (g.is_zero()) throw ZeroDivisor("division by the zero polynomial");
    DivisionResult res{std::vector<Polynomial>(), Polynomial::zero(f.domain(), f.nvars())};
    res.quotients.assign(divisors.size(), Polynomial::zero(f.domain(), f.nvars()));

    Polynomial h = f;
    std::vector<Term> remainder_terms;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Polynomial& g = divisors[k];
            if (g.leading_monomial().divides(lead.mono)) {
                Term t{lead.coeff / g.leading_coefficient(),
                       lead.mono / g.leading_monomial()};
                res.quotients[k] = res.quotients[k] +
                                   Polynomial::from_term(f.domain(), t.coeff, t.mono);
                h = h - g.times_term(t);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder_terms.push_back(lead);
            h = h - Polynomial::from_term(f.domain(), lead.coeff, lead.mono);
        }
    }
    // Terms were moved to the remainder in strictly descending order.
    res.remainder = Polynomial(f.domain(), f.nvars(), std::move(remainder_terms));
    return res;
}

namespace {

bool scalar_is_negative(const Scalar& s) {
    return s.domain().is_rationals() && s.rational() < 0;
}

Scalar scalar_abs(const Scalar& s) {
    return scalar_is_negative(s) ? -s : s;
}

std::string term_body(const Scalar& coeff_magnitude, const Monomial& m) {
    if (m.is_one()) return coeff_magnitude.to_string();
    if (coeff_magnitude.is_one()) return m.to_string();
    return coeff_magnitude.to_string() + "*" + m.to_string();
}

} // namespace

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        const bool neg = scalar_is_negative(t.coeff);
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_body(scalar_abs(t.coeff), t.mono);
    }
    return out;
}

} // namespace ggb
