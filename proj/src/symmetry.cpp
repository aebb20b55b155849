#include "achro/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace achro {

namespace {

// Relabels the permuted matrix on the fly and compares against best.
// Returns -1 / 0 / +1 for less / equal / greater; fills out when not greater.
int relabel_compare(const ColorMatrix& m, const std::vector<int>& rho,
                    const std::vector<int>& sigma, const std::vector<Color>& best,
                    std::vector<Color>& out, std::vector<Color>& map) {
    std::fill(map.begin(), map.end(), kUnassigned);
    Color next = 1;
    int verdict = 0;  // still equal
    size_t t = 0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j, ++t) {
            const Color c = m.at(rho[i], sigma[j]);
            if (map[c] == kUnassigned) map[c] = next++;
            const Color v = map[c];
            if (verdict == 0 && !best.empty()) {
                if (v > best[t]) return 1;
                if (v < best[t]) verdict = -1;
            }
            out[t] = v;
        }
    return best.empty() ? -1 : verdict;
}

}  // namespace

CanonicalForm canonical_form(const ColorMatrix& m, int cell_cap) {
    if (!m.well_formed() || !m.total() || !is_proper(m))
        throw std::invalid_argument("canonical_form: matrix must be total and proper");
    if (m.rows * m.cols > cell_cap)
        throw TooLargeForCanonical("too large for exact canonicalization");

    std::vector<int> rho(m.rows), sigma(m.cols);
    std::iota(rho.begin(), rho.end(), 0);
    std::iota(sigma.begin(), sigma.end(), 0);

    std::vector<Color> best;
    std::vector<Color> cand(static_cast<size_t>(m.rows) * m.cols);
    std::vector<Color> map(static_cast<size_t>(m.palette) + 1, kUnassigned);
    CanonicalForm cf;

    do {
        do {
            if (relabel_compare(m, rho, sigma, best, cand, map) < 0) {
                best = cand;
                cf.row_perm = rho;
                cf.col_perm = sigma;
                cf.color_map.assign(map.begin(), map.end());
            }
        } while (std::next_permutation(rho.begin(), rho.end()));
        // next_permutation leaves rho sorted again
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    cf.matrix = ColorMatrix(m.rows, m.cols, m.palette);
    cf.matrix.cells = best;
    // colours absent from m get the leftover images so the map stays a bijection
    std::vector<char> taken(static_cast<size_t>(m.palette) + 1, 0);
    for (Color c = 1; c <= m.palette; ++c)
        if (cf.color_map[c] != kUnassigned) taken[cf.color_map[c]] = 1;
    Color spare = 1;
    for (Color c = 1; c <= m.palette; ++c)
        if (cf.color_map[c] == kUnassigned) {
            while (taken[spare]) ++spare;
            cf.color_map[c] = spare;
            taken[spare] = 1;
        }
    return cf;
}

bool are_equivalent(const ColorMatrix& a, const ColorMatrix& b, int cell_cap) {
    if (a.rows != b.rows || a.cols != b.cols || a.palette != b.palette)
        throw std::invalid_argument("are_equivalent: dimension mismatch");
    return canonical_form(a, cell_cap).matrix == canonical_form(b, cell_cap).matrix;
}

}  // namespace achro
