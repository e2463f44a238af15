#include "ggb/monomial_ideal.hpp"

#include <algorithm>

namespace ggb {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
    if (generators.empty())
        throw EmptyGeneratorSet("monomial ideal needs at least one generator");
    for (const Monomial& g : generators)
        if (g.nvars() != nvars_)
            throw ArityMismatch("generator arity differs from ideal arity");
    // Minimalize: keep only generators not divisible by another generator.
    std::sort(generators.begin(), generators.end(), GrevlexLess{});
    std::vector<Monomial> minimal;
    for (const Monomial& g : generators) {
        // Any divisor of g sorts before g, so scanning kept elements is
        // enough; duplicates are caught by self-divisibility.
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& kept) { return kept.divides(g); });
        if (!redundant) minimal.push_back(g);
    }
    std::reverse(minimal.begin(), minimal.end()); // descending grevlex
    gens_ = std::move(minimal);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != nvars_)
        throw ArityMismatch("membership test with mismatched arity");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ">";
}

WeaklyRevlexReport is_weakly_revlex(const MonomialIdeal& J) {
    // Generators are stored in descending grevlex, so the first failure
    // found is the greatest failing pair.
    for (const Monomial& g : J.generators()) {
        for (const Monomial& m : monomials_of_degree(g.degree(), J.nvars())) {
            if (!grevlex_greater(m, g)) break; // descending enumeration
            if (!J.contains(m))
                return {false, RevlexWitness{g, m}};
        }
    }
    return {true, std::nullopt};
}

namespace {

int max_generator_degree(const MonomialIdeal& J) {
    int d = 0;
    for (const Monomial& g : J.generators()) d = std::max(d, g.degree());
    return d;
}

} // namespace

RevlexReport is_revlex(const MonomialIdeal& J, std::optional<int> degree_bound) {
    int bound;
    bool exact = false;
    if (J.nvars() == 2 && is_artinian(J)) {
        // Beyond (pure x power degree + pure y power degree) every degree
        // slice lies entirely in J, so the property is decided exactly.
        int ax = 0, ay = 0;
        for (const Monomial& g : J.generators()) {
            ax = std::max(ax, g.exponent(0));
            ay = std::max(ay, g.exponent(1));
        }
        bound = ax + ay;
        exact = true;
    } else {
        if (!degree_bound)
            throw Error("is_revlex needs a degree bound for this ideal "
                        "(not Artinian in two variables)");
        bound = *degree_bound;
        if (bound < max_generator_degree(J))
            throw Error("is_revlex degree bound below maximal generator degree");
    }
    for (int d = 0; d <= bound; ++d) {
        // The degree-d members must form a prefix of the descending
        // grevlex enumeration of the slice.
        std::optional<Monomial> first_missing;
        for (const Monomial& m : monomials_of_degree(d, J.nvars())) {
            if (J.contains(m)) {
                if (first_missing)
                    return {false, exact, bound, RevlexWitness{m, *first_missing}};
            } else if (!first_missing) {
                first_missing = m;
            }
        }
    }
    return {true, exact, bound, std::nullopt};
}

Staircase staircase(const MonomialIdeal& J) {
    if (J.nvars() != 2)
        throw ArityMismatch("staircase is defined for two-variable ideals");
    Staircase s;
    for (const Monomial& g : J.generators())
        s.corners.emplace_back(g.exponent(0), g.exponent(1));
    std::sort(s.corners.begin(), s.corners.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return s;
}

bool is_artinian(const MonomialIdeal& J) {
    for (int v = 0; v < J.nvars(); ++v) {
        bool pure = false;
        for (const Monomial& g : J.generators()) {
            if (g.exponent(v) == g.degree() && g.degree() > 0) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

long long hilbert_function(const MonomialIdeal& J, int degree) {
    long long count = 0;
    for (const Monomial& m : monomials_of_degree(degree, J.nvars()))
        if (!J.contains(m)) ++count;
    return count;
}

long long standard_monomial_count(const MonomialIdeal& J) {
    if (!is_artinian(J))
        throw NotArtinian("ideal lacks a pure power of some variable; "
                          "standard monomials are infinite");
    long long total = 0;
    // Once a whole degree slice is inside J, all higher slices are too.
    for (int d = 0;; ++d) {
        long long hf = hilbert_function(J, d);
        if (hf == 0) break;
        total += hf;
    }
    return total;
}

} // namespace ggb
