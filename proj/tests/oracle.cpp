#include "oracle.hpp"

#include <cstdint>

namespace achro::oracle {

namespace {

struct PartitionWalk {
    int p, q, T;
    std::vector<uint64_t> class_rows, class_cols;  // line masks per class
    std::vector<int> cls_of;                       // class of each cell
    std::vector<char>* feasible;

    bool complete_with(int m) const {
        // class pairs are good iff some line holds cells of both classes
        std::vector<uint64_t> adj(m, 0);
        for (int i = 0; i < p; ++i) {
            uint64_t present = 0;
            for (int j = 0; j < q; ++j) present |= 1ULL << cls_of[i * q + j];
            for (int a = 0; a < m; ++a)
                if ((present >> a) & 1ULL) adj[a] |= present;
        }
        for (int j = 0; j < q; ++j) {
            uint64_t present = 0;
            for (int i = 0; i < p; ++i) present |= 1ULL << cls_of[i * q + j];
            for (int a = 0; a < m; ++a)
                if ((present >> a) & 1ULL) adj[a] |= present;
        }
        const uint64_t all = (m == 64) ? ~0ULL : ((1ULL << m) - 1);
        for (int a = 0; a < m; ++a)
            if ((adj[a] & all) != all) return false;
        return true;
    }

    void walk(int cell, int classes) {
        if (cell == T) {
            if (!(*feasible)[classes] && complete_with(classes))
                (*feasible)[classes] = 1;
            return;
        }
        const int i = cell / q, j = cell % q;
        for (int c = 0; c < classes; ++c) {
            if ((class_rows[c] >> i) & 1ULL) continue;
            if ((class_cols[c] >> j) & 1ULL) continue;
            class_rows[c] |= 1ULL << i;
            class_cols[c] |= 1ULL << j;
            cls_of[cell] = c;
            walk(cell + 1, classes);
            class_rows[c] &= ~(1ULL << i);
            class_cols[c] &= ~(1ULL << j);
        }
        // open a new class (first-occurrence canonical labels)
        class_rows[classes] = 1ULL << i;
        class_cols[classes] = 1ULL << j;
        cls_of[cell] = classes;
        walk(cell + 1, classes + 1);
        class_rows[classes] = 0;
        class_cols[classes] = 0;
    }
};

}  // namespace

std::vector<char> feasible_palettes(int p, int q) {
    const int T = p * q;
    std::vector<char> feasible(T + 1, 0);
    PartitionWalk w{p, q, T, std::vector<uint64_t>(T + 1, 0),
                    std::vector<uint64_t>(T + 1, 0), std::vector<int>(T, 0), &feasible};
    w.walk(0, 0);
    return feasible;
}

int achromatic_number(int p, int q) {
    const auto f = feasible_palettes(p, q);
    for (int k = p * q; k >= 1; --k)
        if (f[k]) return k;
    return 0;
}

bool feasible_literal(int p, int q, int k) {
    const int T = p * q;
    std::vector<int> a(T, 1);
    for (;;) {
        // proper?
        bool proper = true;
        for (int i = 0; i < p && proper; ++i)
            for (int j1 = 0; j1 < q && proper; ++j1)
                for (int j2 = j1 + 1; j2 < q; ++j2)
                    if (a[i * q + j1] == a[i * q + j2]) {
                        proper = false;
                        break;
                    }
        for (int j = 0; j < q && proper; ++j)
            for (int i1 = 0; i1 < p && proper; ++i1)
                for (int i2 = i1 + 1; i2 < p; ++i2)
                    if (a[i1 * q + j] == a[i2 * q + j]) {
                        proper = false;
                        break;
                    }
        if (proper) {
            std::vector<uint64_t> adj(k + 1, 0);
            std::vector<char> seen(k + 1, 0);
            for (int i = 0; i < p; ++i) {
                uint64_t present = 0;
                for (int j = 0; j < q; ++j) present |= 1ULL << a[i * q + j];
                for (int c = 1; c <= k; ++c)
                    if ((present >> c) & 1ULL) adj[c] |= present;
            }
            for (int j = 0; j < q; ++j) {
                uint64_t present = 0;
                for (int i = 0; i < p; ++i) present |= 1ULL << a[i * q + j];
                for (int c = 1; c <= k; ++c)
                    if ((present >> c) & 1ULL) adj[c] |= present;
            }
            for (int c : a) seen[c] = 1;
            bool complete = true;
            const uint64_t all = ((1ULL << k) - 1) << 1;
            for (int c = 1; c <= k && complete; ++c) {
                if (!seen[c]) complete = false;
                if ((adj[c] & all) != all) complete = false;
            }
            if (complete) return true;
        }
        // odometer
        int pos = T - 1;
        while (pos >= 0 && a[pos] == k) a[pos--] = 1;
        if (pos < 0) return false;
        ++a[pos];
    }
}

}  // namespace achro::oracle
