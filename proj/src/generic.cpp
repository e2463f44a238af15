#include "ggb/generic.hpp"

#include <algorithm>

#include "ggb/groebner.hpp"

namespace ggb {

GenericSpec::GenericSpec(int nv, std::vector<int> degs, const CoeffDomain& d,
                         std::uint64_t s)
    : nvars(nv), degrees(std::move(degs)), domain(d), seed(s) {
    if (nvars < 1) throw ArityMismatch("generic spec needs at least one variable");
    if (degrees.empty()) throw Error("generic spec needs at least one degree");
    for (int deg : degrees)
        if (deg < 1) throw Error("generic form degrees must be positive");
    std::sort(degrees.begin(), degrees.end());
}

Polynomial sample_generic_form(int degree, int nvars, const CoeffDomain& domain,
                               Rng& rng, std::set<Scalar>& exclude) {
    if (degree < 1) throw Error("generic form degree must be >= 1");
    std::vector<Term> terms;
    for (const Monomial& m : monomials_of_degree(degree, nvars)) {
        Scalar c = sample_scalar(domain, rng, exclude);
        exclude.insert(c);
        terms.push_back(Term{std::move(c), m});
    }
    return Polynomial(domain, nvars, std::move(terms));
}

std::vector<Polynomial> sample_generic_ideal(const GenericSpec& spec) {
    Rng rng(spec.seed);
    std::set<Scalar> used;
    std::vector<Polynomial> forms;
    forms.reserve(spec.degrees.size());
    for (int d : spec.degrees)
        forms.push_back(sample_generic_form(d, spec.nvars, spec.domain, rng, used));
    return forms;
}

Polynomial reduce_second_generator(const Polynomial& f1, const Polynomial& f2) {
    if (f1.nvars() != 2 || f2.nvars() != 2)
        throw ArityMismatch("second-generator reduction works in two variables");
    if (f1.domain() != f2.domain())
        throw DomainMismatch("generators live in different coefficient domains");
    if (f1.is_zero() || f2.is_zero())
        throw ZeroPolynomial("second-generator reduction of a zero polynomial");
    if (!f1.is_homogeneous() || !f2.is_homogeneous())
        throw Degenerate("second-generator reduction expects forms");

    const int n = f1.degree();
    const int m = f2.degree();
    if (n > m)
        throw DegreeOrder("deg f1 = " + std::to_string(n) + " exceeds deg f2 = " +
                          std::to_string(m) + "; swap the generators");
    if (f1.leading_monomial() != Monomial({n, 0}))
        throw Degenerate("f1 has a vanishing x^n coefficient; input not generic");

    Polynomial r = normal_form(f2, {f1});
    // Generic remainder support: x^(n-1)y^(mu+1), ..., y^m — n terms.
    if (static_cast<int>(r.term_count()) != n)
        throw Degenerate("remainder support has " + std::to_string(r.term_count()) +
                         " terms, expected " + std::to_string(n) +
                         "; input not generic");
    return r;
}

} // namespace ggb
