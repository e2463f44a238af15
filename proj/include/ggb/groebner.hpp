#ifndef GGB_GROEBNER_HPP
#define GGB_GROEBNER_HPP

#include <vector>

#include "ggb/monomial_ideal.hpp"
#include "ggb/polynomial.hpp"

namespace ggb {

// Finitely generated ideal; generators are nonzero and share one ring.
struct Ideal {
    CoeffDomain domain;
    int nvars;
    std::vector<Polynomial> generators;

    Ideal(const CoeffDomain& d, int nv, std::vector<Polynomial> gens);
};

struct GroebnerBasis {
    CoeffDomain domain;
    int nvars;
    std::vector<Polynomial> elements; // monic, leading monomials descending
    bool reduced = false;
};

// S(f, g) = (L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g)); the
// leading terms cancel, so LM(S) < L unless S = 0.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Remainder of f under division by G (list order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

struct BuchbergerOptions {
    // Buchberger's coprimality criterion is always applied; the chain
    // criterion is optional and must not change the reduced basis.
    bool use_chain_criterion = false;
};

// Buchberger's algorithm with the normal selection strategy (smallest
// grevlex lcm first, ties by index pair). The result is inter-reduced and
// monic, hence canonical for the order.
GroebnerBasis buchberger(const Ideal& I, const BuchbergerOptions& opt = {});

// Monomial ideal minimally generated by the leading monomials of G.
MonomialIdeal initial_ideal(const GroebnerBasis& G);

} // namespace ggb

#endif
