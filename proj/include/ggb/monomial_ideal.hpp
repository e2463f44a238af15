#ifndef GGB_MONOMIAL_IDEAL_HPP
#define GGB_MONOMIAL_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ggb/monomial.hpp"

namespace ggb {

// Minimal generating set of a monomial ideal, stored in descending grevlex.
class MonomialIdeal {
public:
    // Minimalizes the input. EmptyGeneratorSet on an empty list.
    MonomialIdeal(int nvars, std::vector<Monomial> generators);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const; // ArityMismatch

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string() const; // "<x^2, x*y^2, y^4>"

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// Same-degree monomial pair proving a reverse-lex property violation:
// `missing` precedes `member` in grevlex but is not in the ideal.
struct RevlexWitness {
    Monomial member;
    Monomial missing;
};

struct WeaklyRevlexReport {
    bool holds;
    std::optional<RevlexWitness> witness; // member is a minimal generator
    explicit operator bool() const { return holds; }
};

// Whenever g is a minimal generator, every same-degree monomial greater
// than g in grevlex must lie in the ideal. Witness on failure is the
// greatest failing (generator, predecessor) pair.
WeaklyRevlexReport is_weakly_revlex(const MonomialIdeal& J);

struct RevlexReport {
    bool holds;
    bool exact;        // decided exactly (Artinian, two variables)
    int bound;         // highest degree actually checked
    std::optional<RevlexWitness> witness;
    explicit operator bool() const { return holds; }
};

// The membership-closure property of is_weakly_revlex required of every
// ideal member, not just generators. Decided exactly for Artinian ideals
// in two variables; otherwise `degree_bound` is mandatory and must be at
// least the maximal generator degree.
RevlexReport is_revlex(const MonomialIdeal& J,
                       std::optional<int> degree_bound = std::nullopt);

// Corner points (x-exponent, y-exponent) of a two-variable ideal, sorted
// by strictly decreasing x-exponent.
struct Staircase {
    std::vector<std::pair<int, int>> corners;
};

Staircase staircase(const MonomialIdeal& J); // ArityMismatch unless nvars == 2

// True iff the ideal contains a pure power of every variable.
bool is_artinian(const MonomialIdeal& J);

// Number of standard monomials (monomials outside J) of the given degree.
long long hilbert_function(const MonomialIdeal& J, int degree);

// Total number of standard monomials; NotArtinian when infinite.
long long standard_monomial_count(const MonomialIdeal& J);

} // namespace ggb

#endif
