#include "achro/ledger.hpp"

#include <stdexcept>

namespace achro {

uint64_t PairLedger::covered_pairs() const {
    uint64_t n = 0;
    for (Color a = 1; a <= palette; ++a)
        for (Color b = a + 1; b <= palette; ++b)
            if (good(a, b)) ++n;
    return n;
}

uint64_t PairLedger::total_witnesses() const {
    uint64_t n = 0;
    for (Color a = 1; a <= palette; ++a)
        for (Color b = a + 1; b <= palette; ++b) n += count(a, b);
    return n;
}

int PairLedger::good_with(Color c, std::span<const Color> others) const {
    int n = 0;
    for (Color d : others)
        if (d != c && good(c, d)) ++n;
    return n;
}

PairLedger build_ledger(const ColorMatrix& m) {
    if (!is_proper(m))
        throw std::invalid_argument("build_ledger: matrix is not proper");
    PairLedger led(m.palette);
    const int k = m.palette;
    auto bump = [k](std::vector<uint32_t>& tab, Color a, Color b) {
        tab[static_cast<size_t>(a - 1) * k + (b - 1)]++;
        tab[static_cast<size_t>(b - 1) * k + (a - 1)]++;
    };
    for (int i = 0; i < m.rows; ++i)
        for (int j1 = 0; j1 < m.cols; ++j1) {
            const Color a = m.at(i, j1);
            if (a == kUnassigned) continue;
            for (int j2 = j1 + 1; j2 < m.cols; ++j2) {
                const Color b = m.at(i, j2);
                if (b != kUnassigned) bump(led.row_hits, a, b);
            }
        }
    for (int j = 0; j < m.cols; ++j)
        for (int i1 = 0; i1 < m.rows; ++i1) {
            const Color a = m.at(i1, j);
            if (a == kUnassigned) continue;
            for (int i2 = i1 + 1; i2 < m.rows; ++i2) {
                const Color b = m.at(i2, j);
                if (b != kUnassigned) bump(led.col_hits, a, b);
            }
        }
    return led;
}

}  // namespace achro
