#ifndef ACHRO_STATS_HPP
#define ACHRO_STATS_HPP

#include <span>
#include <string>
#include <vector>

#include "achro/matrix.hpp"

namespace achro {

// The vector (c_1, ..., c_m) of colour frequencies for a (p,q,k) instance,
// m = min(p,q): c_l counts the colours occurring exactly l times.
struct FrequencyProfile {
    int rows = 0;
    int cols = 0;
    int palette = 0;
    std::vector<int> count;  // count[l] for l in [1, min(rows,cols)]; count[0] unused

    FrequencyProfile() = default;
    FrequencyProfile(int p, int q, int k)
        : rows(p), cols(q), palette(k), count(static_cast<size_t>(std::min(p, q)) + 1, 0) {}

    int max_freq() const { return static_cast<int>(count.size()) - 1; }
    int c(int l) const {
        return (l >= 1 && l <= max_freq()) ? count[l] : 0;
    }
    // c_{l+}: number of colours with frequency at least l.
    int c_at_least(int l) const;
    // Sum of l*c_l over l >= from_l.
    long long weighted_sum(int from_l = 1) const;
    int colors_used() const { return c_at_least(1); }

    bool operator==(const FrequencyProfile&) const = default;
};

// Pre: m total and proper (throws std::invalid_argument otherwise).
FrequencyProfile frequency_profile(const ColorMatrix& m);

// Colour ids with frequency exactly l, ascending.  Partial matrices allowed
// (frequency of what is assigned).
std::vector<Color> colors_with_frequency(const ColorMatrix& m, int l);

// Number of 2-colours common to both named rows (resp. columns); 0-based
// indices.  Pre: m total, proper, indices distinct (throws otherwise).
int row_stats(const ColorMatrix& m, int i1, int i2);
int col_stats(const ColorMatrix& m, int j1, int j2);

// Row/column incidence multisets of a set D of 2-colours, stored decreasing.
// Sum of each part equals 2|D|.
struct TypeSignature {
    std::vector<int> row_part;
    std::vector<int> col_part;
    bool operator==(const TypeSignature&) const = default;
};

// Renders like "(2^1 1^2, 2^2)".
std::string to_string(const TypeSignature& t);

// Pre: m total, proper; every colour of group has frequency exactly 2
// (throws std::invalid_argument otherwise).
TypeSignature type_of(const ColorMatrix& m, std::span<const Color> group);

}  // namespace achro

#endif
