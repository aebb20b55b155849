#ifndef ACHRO_SYMMETRY_HPP
#define ACHRO_SYMMETRY_HPP

#include <stdexcept>
#include <vector>

#include "achro/matrix.hpp"

namespace achro {

// Canonical representative under row x column x colour permutations: the
// lexicographically least matrix (row-major, colours relabelled in first
// occurrence order) over all row/column permutations.
struct CanonicalForm {
    ColorMatrix matrix;
    std::vector<int> row_perm;    // canonical[i][j] = input[row_perm[i]][col_perm[j]]
    std::vector<int> col_perm;
    std::vector<Color> color_map; // then colours mapped through color_map
};

struct TooLargeForCanonical : std::length_error {
    using std::length_error::length_error;
};

inline constexpr int kDefaultCanonicalCellCap = 64;

// Pre: m total and proper; rows*cols <= cell_cap (throws TooLargeForCanonical;
// searches use prefix symmetry breaking instead at larger sizes).
CanonicalForm canonical_form(const ColorMatrix& m,
                             int cell_cap = kDefaultCanonicalCellCap);

// True iff both matrices have the same canonical form.  Throws
// std::invalid_argument on dimension or palette mismatch.
bool are_equivalent(const ColorMatrix& a, const ColorMatrix& b,
                    int cell_cap = kDefaultCanonicalCellCap);

}  // namespace achro

#endif
