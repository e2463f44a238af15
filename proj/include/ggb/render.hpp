#ifndef GGB_RENDER_HPP
#define GGB_RENDER_HPP

#include <string>

#include "ggb/monomial_ideal.hpp"

namespace ggb {

// Lattice view of a two-variable ideal: rows are y-exponents (descending),
// '#' marks cells inside the ideal, '.' standard monomials. The box spans
// (max x-corner + 2) columns by (max y-corner + 2) rows. Byte-deterministic.
std::string render_staircase_ascii(const MonomialIdeal& J);

// Same box as SVG: one rect per lattice cell, shaded when inside the
// ideal, corner cells labeled with their generator monomial.
std::string render_staircase_svg(const MonomialIdeal& J);

} // namespace ggb

#endif
