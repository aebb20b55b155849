#ifndef ACHRO_TESTS_HELPERS_HPP
#define ACHRO_TESTS_HELPERS_HPP

#include <numeric>
#include <random>

#include "achro/matrix.hpp"

namespace achro::testing {

// rejection-sampled total proper matrix; small sizes only
inline ColorMatrix random_total_proper(int p, int q, int k, std::mt19937_64& rng) {
    for (;;) {
        ColorMatrix m(p, q, k);
        bool ok = true;
        for (int i = 0; i < p && ok; ++i)
            for (int j = 0; j < q && ok; ++j) {
                int legal[64], n = 0;
                for (Color c = 1; c <= k; ++c) {
                    bool clash = false;
                    for (int jj = 0; jj < j && !clash; ++jj)
                        if (m.at(i, jj) == c) clash = true;
                    for (int ii = 0; ii < i && !clash; ++ii)
                        if (m.at(ii, j) == c) clash = true;
                    if (!clash) legal[n++] = c;
                }
                if (n == 0)
                    ok = false;
                else
                    m.at(i, j) = legal[rng() % n];
            }
        if (ok) return m;
    }
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

// random group element applied to m: rows, columns, then colours
inline ColorMatrix random_group_image(const ColorMatrix& m, std::mt19937_64& rng) {
    const auto rho = random_perm(m.rows, rng);
    const auto sigma = random_perm(m.cols, rng);
    std::vector<Color> pi(m.palette + 1);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin() + 1, pi.end(), rng);
    return recolored(permuted(m, rho, sigma), pi);
}

}  // namespace achro::testing

#endif
