#ifndef GGB_CLOSED_FORM_HPP
#define GGB_CLOSED_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "ggb/groebner.hpp"
#include "ggb/monomial_ideal.hpp"
#include "ggb/polynomial.hpp"

namespace ggb {

// Degree data of a two-variable generic pair: n = deg f1 <= m = deg f2.
struct ClosedFormSpec {
    int n;
    int m;

    ClosedFormSpec(int n_, int m_);
    int mu() const { return m - n; }
    int basis_size() const { return n + 1; }
};

// Number of support monomials of basis element t (1-based).
int closed_form_row_length(const ClosedFormSpec& spec, int t);

// i-th support monomial of basis element t, 1-based, descending grevlex:
// row 1 is x^n, x^(n-1)y, ..., y^n; row t >= 2 starts at
// x^(n-t+1) y^(mu+2t-3) and trades one x for one y per step.
Monomial closed_form_monomial(const ClosedFormSpec& spec, int t, int i);

inline Monomial closed_form_leading_monomial(const ClosedFormSpec& spec, int t) {
    return closed_form_monomial(spec, t, 1);
}

// The explicit basis f_1..f_{n+1} for <f1, r>: each new element is the
// remainder of S(f_t, f_{t+1}) under division by f_{t+1}, computed by the
// coefficient recursion on monic-normalized rows. Every stored coefficient
// is nonzero; a vanishing value means the input was not generic.
class ClosedFormBasis {
public:
    const ClosedFormSpec& spec() const { return spec_; }
    const CoeffDomain& domain() const { return domain_; }

    // Raw coefficient a_{t,i}, both indices 1-based.
    const Scalar& coefficient(int t, int i) const;
    // Monic-normalized coefficient a_{t,i} / a_{t,1}.
    Scalar monic_coefficient(int t, int i) const;

    const std::vector<Polynomial>& polynomials() const { return polys_; }
    Polynomial monic(int t) const; // 1-based
    std::vector<Polynomial> monic_polynomials() const;

private:
    friend ClosedFormBasis closed_form_basis(const Polynomial& f1,
                                             const Polynomial& r);
    ClosedFormBasis(ClosedFormSpec spec, const CoeffDomain& domain)
        : spec_(spec), domain_(domain) {}

    ClosedFormSpec spec_;
    CoeffDomain domain_;
    std::vector<std::vector<Scalar>> rows_; // rows_[t-1][i-1] = a_{t,i}
    std::vector<Polynomial> polys_;
};

// Builds the table and polynomials from f1 and the reduced second
// generator r (shape-validated). Degenerate on any vanishing coefficient.
ClosedFormBasis closed_form_basis(const Polynomial& f1, const Polynomial& r);

// J = <x^n, x^(n-1)y^(mu+1), x^(n-2)y^(mu+3), ..., y^(mu+2n-1)>.
MonomialIdeal closed_form_initial_ideal(const ClosedFormSpec& spec);

// Relation on the leading terms of the monic basis: the entries pair with
// LT(f_1..f_{n+1}) to zero.
struct Syzygy {
    std::pair<int, int> label; // (i, j) basis positions, 1-based
    std::vector<Polynomial> entries;
};

// S_{1,2} = (y^(mu+1), -x, 0, ..., 0); S_{i,i+1} = y^2 at slot i, -x at
// slot i+1 for 1 < i <= n.
Syzygy syzygy_pair(int i, const ClosedFormSpec& spec, const CoeffDomain& domain);

struct SyzygyExpansion {
    Syzygy direct;   // two-entry form of S_{i,i+t}
    Syzygy expanded; // sum over j of x^j y^(2(t-1-j)) S_{i+j,i+j+1}
    struct Step {
        Monomial multiplier;
        std::pair<int, int> pair;
    };
    std::vector<Step> certificate;
    bool entrywise_equal;
};

// Both sides of the telescoping identity expressing S_{i,i+t} over the
// consecutive syzygies, with the monomial multipliers recorded.
SyzygyExpansion expand_syzygy(int i, int t, const ClosedFormSpec& spec,
                              const CoeffDomain& domain);

// Exact check: sum_k entries[k] * LT(monic f_k) = 0, entries homogeneous
// with a uniform total degree across the relation.
bool verify_syzygy(const Syzygy& s, const ClosedFormBasis& basis);

struct CrossValidateReport {
    bool agreement = false;
    std::string mismatch; // empty when agreement holds
    std::vector<Monomial> buchberger_initial;
    std::vector<Monomial> closed_form_initial;
};

// Runs the explicit construction and Buchberger's algorithm independently
// on the same pair and compares: equal initial ideals, mutual ideal
// membership, and all S-polynomials of the explicit basis reducing to zero.
CrossValidateReport cross_validate(const ClosedFormSpec& spec,
                                   const Polynomial& f1, const Polynomial& f2);

} // namespace ggb

#endif
