#include "ggb/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ggb {

Ideal::Ideal(const CoeffDomain& d, int nv, std::vector<Polynomial> gens)
    : domain(d), nvars(nv), generators(std::move(gens)) {
    if (generators.empty())
        throw EmptyGeneratorSet("ideal needs at least one generator");
    for (const Polynomial& g : generators) {
        if (g.is_zero()) throw ZeroPolynomial("ideal generator is zero");
        if (g.domain() != domain)
            throw DomainMismatch("generator domain differs from ideal domain");
        if (g.nvars() != nvars)
            throw ArityMismatch("generator arity differs from ideal arity");
    }
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomial("S-polynomial of a zero polynomial");
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    const Term tf{f.leading_coefficient().inverse(), l / f.leading_monomial()};
    const Term tg{g.leading_coefficient().inverse(), l / g.leading_monomial()};
    return f.times_term(tf) - g.times_term(tg);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    return divide(f, G).remainder;
}

namespace {

struct PairKey {
    Monomial lcm_;
    std::size_t i, j; // i < j

    bool operator<(const PairKey& o) const {
        const auto ord = grevlex_cmp(lcm_, o.lcm_);
        if (ord != std::strong_ordering::equal)
            return ord == std::strong_ordering::less;
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

bool coprime(const Monomial& a, const Monomial& b) {
    for (int v = 0; v < a.nvars(); ++v)
        if (a.exponent(v) > 0 && b.exponent(v) > 0) return false;
    return true;
}

// Buchberger's chain criterion: (i, j) is redundant if some LM(G[k])
// divides lcm(i, j) and both chain pairs already left the queue.
bool chain_redundant(const std::vector<Polynomial>& G, const PairKey& p,
                     const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (k == p.i || k == p.j) continue;
        if (!G[k].leading_monomial().divides(p.lcm_)) continue;
        auto key = [](std::size_t a, std::size_t b) {
            return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k)))
            return true;
    }
    return false;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
    // Minimal set: drop elements whose leading monomial another divides.
    std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : G) {
        bool redundant = std::any_of(
            minimal.begin(), minimal.end(), [&](const Polynomial& h) {
                return h.leading_monomial().divides(g.leading_monomial());
            });
        if (!redundant) minimal.push_back(g);
    }
    // Inter-reduce tails until stable, then normalize.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial r = normal_form(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r); // leading term survives: LMs are minimal
                changed = true;
            }
        }
    }
    for (Polynomial& g : minimal) g = g.monic();
    // Ascending leading monomials: lowest-degree element first.
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return minimal;
}

} // namespace

GroebnerBasis buchberger(const Ideal& I, const BuchbergerOptions& opt) {
    std::vector<Polynomial> G = I.generators;
    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            queue.insert(PairKey{
                lcm(G[i].leading_monomial(), G[j].leading_monomial()), i, j});
            pending.emplace(i, j);
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        PairKey p = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({p.i, p.j});

        if (coprime(G[p.i].leading_monomial(), G[p.j].leading_monomial()))
            continue;
        if (opt.use_chain_criterion && chain_redundant(G, p, pending))
            continue;

        Polynomial r = normal_form(s_polynomial(G[p.i], G[p.j]), G);
        if (!r.is_zero()) {
            G.push_back(std::move(r));
            push_pairs_for(G.size() - 1);
        }
    }

    GroebnerBasis out{I.domain, I.nvars, reduce_basis(std::move(G)), true};
    return out;
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
    std::vector<Monomial> lms;
    lms.reserve(G.elements.size());
    for (const Polynomial& g : G.elements) lms.push_back(g.leading_monomial());
    return MonomialIdeal(G.nvars, std::move(lms));
}

} // namespace ggb
