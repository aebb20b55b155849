#include "achro/stats.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace achro {

int FrequencyProfile::c_at_least(int l) const {
    int n = 0;
    for (int f = std::max(l, 1); f <= max_freq(); ++f) n += count[f];
    return n;
}

long long FrequencyProfile::weighted_sum(int from_l) const {
    long long s = 0;
    for (int f = std::max(from_l, 1); f <= max_freq(); ++f)
        s += static_cast<long long>(f) * count[f];
    return s;
}

static std::vector<int> frequencies(const ColorMatrix& m) {
    std::vector<int> freq(static_cast<size_t>(m.palette) + 1, 0);
    for (Color c : m.cells)
        if (c != kUnassigned) freq[c]++;
    return freq;
}

FrequencyProfile frequency_profile(const ColorMatrix& m) {
    if (!m.total() || !is_proper(m))
        throw std::invalid_argument("frequency_profile: matrix must be total and proper");
    FrequencyProfile prof(m.rows, m.cols, m.palette);
    for (auto f : frequencies(m))
        if (f > 0) prof.count[f]++;
    // colour copies sit in distinct rows and columns, so f <= min(p,q) holds
    return prof;
}

std::vector<Color> colors_with_frequency(const ColorMatrix& m, int l) {
    auto freq = frequencies(m);
    std::vector<Color> out;
    for (Color c = 1; c <= m.palette; ++c)
        if (freq[c] == l) out.push_back(c);
    return out;
}

static int shared_two_colors(const ColorMatrix& m, bool by_row, int a, int b) {
    if (!m.total() || !is_proper(m))
        throw std::invalid_argument("line stats need a total proper matrix");
    const int limit = by_row ? m.rows : m.cols;
    if (a == b || a < 0 || b < 0 || a >= limit || b >= limit)
        throw std::invalid_argument("line stats need two distinct valid indices");
    auto freq = frequencies(m);
    std::vector<char> in_a(static_cast<size_t>(m.palette) + 1, 0);
    const int len = by_row ? m.cols : m.rows;
    for (int t = 0; t < len; ++t) {
        const Color c = by_row ? m.at(a, t) : m.at(t, a);
        if (c != kUnassigned) in_a[c] = 1;
    }
    int n = 0;
    for (int t = 0; t < len; ++t) {
        const Color c = by_row ? m.at(b, t) : m.at(t, b);
        if (c != kUnassigned && in_a[c] && freq[c] == 2) ++n;
    }
    return n;
}

int row_stats(const ColorMatrix& m, int i1, int i2) {
    return shared_two_colors(m, true, i1, i2);
}

int col_stats(const ColorMatrix& m, int j1, int j2) {
    return shared_two_colors(m, false, j1, j2);
}

std::string to_string(const TypeSignature& t) {
    auto part = [](const std::vector<int>& v) {
        std::ostringstream os;
        size_t i = 0;
        bool first = true;
        while (i < v.size()) {
            size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if (!first) os << ' ';
            os << v[i] << '^' << (j - i);
            first = false;
            i = j;
        }
        return os.str();
    };
    return "(" + part(t.row_part) + ", " + part(t.col_part) + ")";
}

TypeSignature type_of(const ColorMatrix& m, std::span<const Color> group) {
    if (!m.total() || !is_proper(m))
        throw std::invalid_argument("type_of: matrix must be total and proper");
    auto freq = frequencies(m);
    std::vector<char> in_group(static_cast<size_t>(m.palette) + 1, 0);
    for (Color c : group) {
        if (c < 1 || c > m.palette || freq[c] != 2)
            throw std::invalid_argument("type_of: group must contain 2-colours only");
        in_group[c] = 1;
    }
    TypeSignature sig;
    for (int i = 0; i < m.rows; ++i) {
        int n = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != kUnassigned && in_group[m.at(i, j)]) ++n;
        if (n > 0) sig.row_part.push_back(n);
    }
    for (int j = 0; j < m.cols; ++j) {
        int n = 0;
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, j) != kUnassigned && in_group[m.at(i, j)]) ++n;
        if (n > 0) sig.col_part.push_back(n);
    }
    std::sort(sig.row_part.begin(), sig.row_part.end(), std::greater<int>());
    std::sort(sig.col_part.begin(), sig.col_part.end(), std::greater<int>());
    return sig;
}

}  // namespace achro
