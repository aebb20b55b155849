#ifndef ACHRO_TESTS_ORACLE_HPP
#define ACHRO_TESTS_ORACLE_HPP

// Brute-force reference results for small grids, kept independent of the
// search engine: feasibility is decided by enumerating proper colour
// partitions (colourings up to colour renaming) and checking completeness
// directly on line incidences.

#include <vector>

namespace achro::oracle {

// feasible[k] for k in [0, p*q]: does a total proper complete colouring
// with exactly k colours exist?
std::vector<char> feasible_palettes(int p, int q);

int achromatic_number(int p, int q);

// literal enumeration over all k^(p*q) assignments; use only for tiny grids
bool feasible_literal(int p, int q, int k);

}  // namespace achro::oracle

#endif
