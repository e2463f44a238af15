#ifndef GGB_GENERIC_HPP
#define GGB_GENERIC_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "ggb/polynomial.hpp"
#include "ggb/rng.hpp"

namespace ggb {

// Recipe for a randomized "generic" ideal: degrees are kept sorted
// ascending, matching the convention that the lowest degree divides first.
struct GenericSpec {
    int nvars;
    std::vector<int> degrees;
    CoeffDomain domain;
    std::uint64_t seed;

    GenericSpec(int nvars, std::vector<int> degrees, const CoeffDomain& domain,
                std::uint64_t seed);
};

// Dense homogeneous form of the given degree: every degree-d monomial
// carries a nonzero coefficient, all coefficients pairwise distinct and
// outside `exclude`. Used coefficients are added to `exclude` so that
// threading the same set across calls keeps coefficient sets disjoint.
// True genericity (algebraic independence) is simulated by sampling from
// a large domain; degeneracy is detected downstream and resampled.
Polynomial sample_generic_form(int degree, int nvars, const CoeffDomain& domain,
                               Rng& rng, std::set<Scalar>& exclude);

// One form per degree in spec order, coefficients globally distinct.
std::vector<Polynomial> sample_generic_ideal(const GenericSpec& spec);

// Division preprocessing for two variables: with n = deg f1 <= m = deg f2
// and mu = m - n, replaces f2 by r = f2 mod f1, which for generic input has
// support exactly {x^(n-1)y^(mu+1), ..., y^m} (n terms) and generates the
// same ideal together with f1. Degenerate when the support comes up short.
Polynomial reduce_second_generator(const Polynomial& f1, const Polynomial& f2);

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL; // 2^31 - 1

} // namespace ggb

#endif
