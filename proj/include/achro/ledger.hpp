#ifndef ACHRO_LEDGER_HPP
#define ACHRO_LEDGER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "achro/matrix.hpp"

namespace achro {

// Witness counts for every unordered pair of distinct colours, split by the
// axis of the witnessing line.  A pair {a,b} is good iff count(a,b) >= 1.
struct PairLedger {
    int palette = 0;
    std::vector<uint32_t> row_hits;  // palette*palette, symmetric, zero diagonal
    std::vector<uint32_t> col_hits;

    explicit PairLedger(int k = 0)
        : palette(k),
          row_hits(static_cast<size_t>(k) * k, 0),
          col_hits(static_cast<size_t>(k) * k, 0) {}

    uint32_t row_count(Color a, Color b) const {
        return row_hits[static_cast<size_t>(a - 1) * palette + (b - 1)];
    }
    uint32_t col_count(Color a, Color b) const {
        return col_hits[static_cast<size_t>(a - 1) * palette + (b - 1)];
    }
    uint32_t count(Color a, Color b) const { return row_count(a, b) + col_count(a, b); }
    bool good(Color a, Color b) const { return count(a, b) > 0; }

    // Number of unordered pairs with at least one witness.
    uint64_t covered_pairs() const;
    // Sum of all witness counts (each in-line position pair counted once).
    uint64_t total_witnesses() const;

    // How many colours of 'others' form a good pair with 'c'.
    int good_with(Color c, std::span<const Color> others) const;
};

// Pre: is_proper(m); throws std::invalid_argument otherwise (witness counting
// is ill-defined when a line repeats a colour).  Unassigned cells are skipped.
PairLedger build_ledger(const ColorMatrix& m);

}  // namespace achro

#endif
