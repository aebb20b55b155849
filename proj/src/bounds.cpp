#include "achro/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace achro {

long long neighborhood_size(int l, int p, int q) {
    if (p < 1 || q < 1 || l < 1 || l > std::min(p, q))
        throw std::invalid_argument("neighborhood_size: need 1 <= l <= min(p,q)");
    return static_cast<long long>(l) * (p + q - 2) - static_cast<long long>(l) * (l - 1);
}

long long excess_closed(int l, int p, int q, int k) {
    if (k < 2) throw std::invalid_argument("excess_closed: need k >= 2");
    return neighborhood_size(l, p, q) - (k - 1);
}

std::vector<int> feasible_frequencies(int p, int q, int k) {
    std::vector<int> out;
    for (int l = 1; l <= std::min(p, q); ++l) {
        // with a single colour there is nothing to cover, so no excess constraint
        if (k == 1 || excess_closed(l, p, q, k) >= 0) out.push_back(l);
    }
    return out;
}

std::vector<FrequencyProfile> feasible_frequency_profiles(int p, int q, int k) {
    if (p > q) throw std::invalid_argument("feasible_frequency_profiles: need p <= q");
    const int maxl = std::min(p, q);
    std::vector<char> allowed(static_cast<size_t>(maxl) + 1, 0);
    for (int l : feasible_frequencies(p, q, k)) allowed[l] = 1;

    std::vector<FrequencyProfile> out;
    FrequencyProfile cur(p, q, k);
    const long long cells = static_cast<long long>(p) * q;

    // lexicographic enumeration over (c_1, c_2, ...)
    auto rec = [&](auto&& self, int l, long long colors_left, long long cells_left) -> void {
        if (l > maxl) {
            if (colors_left == 0 && cells_left == 0) out.push_back(cur);
            return;
        }
        // remaining frequencies are >= l, so cells_left >= l*colors_left must hold
        if (cells_left < l * colors_left) return;
        const long long hi_allowed =
            allowed[l] ? std::min(colors_left, cells_left / l) : 0;
        for (long long cl = 0; cl <= hi_allowed; ++cl) {
            cur.count[l] = static_cast<int>(cl);
            self(self, l + 1, colors_left - cl, cells_left - cl * l);
        }
        cur.count[l] = 0;
    };
    rec(rec, 1, k, cells);
    return out;
}

int pair_capacity_bound(int p, int q) {
    const long long slots = static_cast<long long>(p) * q * (q - 1) / 2 +
                            static_cast<long long>(q) * p * (p - 1) / 2;
    int k = 1;
    while (static_cast<long long>(k + 1) * k / 2 <= slots) ++k;
    return k;
}

int upper_bound_colors(int p, int q) {
    if (p > q) throw std::invalid_argument("upper_bound_colors: need p <= q");
    const int cap = pair_capacity_bound(p, q);
    int best = q;  // the chromatic number is always achievable
    for (int k = q; k <= cap; ++k)
        if (!feasible_frequency_profiles(p, q, k).empty()) best = k;
    return best;
}

}  // namespace achro
