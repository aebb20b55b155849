#include "achro/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "achro/bounds.hpp"

namespace achro {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::Exhausted: return "EXHAUSTED";
        case SearchStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

PruneCounters& PruneCounters::operator+=(const PruneCounters& o) {
    coverage_potential += o.coverage_potential;
    frequency_envelope += o.frequency_envelope;
    dead_pair += o.dead_pair;
    grow_blocked += o.grow_blocked;
    forbidden_type += o.forbidden_type;
    share_cap += o.share_cap;
    q_sequence += o.q_sequence;
    return *this;
}

uint64_t PruneCounters::total() const {
    return coverage_potential + frequency_envelope + dead_pair + grow_blocked +
           forbidden_type + share_cap + q_sequence;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColors = 62;

// A replayable search decision: a cell assignment or, in lemma mode, the
// committed final frequency of a colour that just reached two copies.
struct Decision {
    enum Kind : uint8_t { Assign, CommitClose, CommitGrow } kind;
    int cell;
    Color color;
};

size_t count_assigns(const std::vector<Decision>& ds) {
    size_t n = 0;
    for (const auto& d : ds)
        if (d.kind == Decision::Assign) ++n;
    return n;
}

enum class Walk { Exhausted, Stop, Abort };

struct SharedControl {
    std::atomic<bool> stop{false};
    std::atomic<uint64_t> nodes{0};
    uint64_t node_budget = 0;  // 0 = unlimited
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> budget_hit{false};

    bool out_of_budget() {
        if (node_budget && nodes.load(std::memory_order_relaxed) > node_budget) {
            budget_hit.store(true);
            return true;
        }
        if (has_deadline && Clock::now() > deadline) {
            budget_hit.store(true);
            return true;
        }
        return false;
    }
};

struct Engine {
    // instance
    int p = 0, q = 0, k = 0, T = 0;
    bool symmetry = true;
    bool lemma = false;

    // assignment state (cells visited column-major: t -> (t % p, t / p))
    std::vector<Color> grid;  // row-major
    std::vector<uint64_t> row_mask, col_mask;
    std::vector<int> row_cnt, col_cnt;
    std::vector<int> freq;
    std::vector<int> cell_pos_flat;  // scan indices of each colour's copies
    int pos_stride = 0;              // = min(p,q), the frequency ceiling
    int used = 0;

    int cell_pos(Color c, int idx) const {
        return cell_pos_flat[static_cast<size_t>(c) * pos_stride + idx];
    }

    // pair coverage
    std::vector<uint16_t> pair_cnt;  // (k+1)*(k+1), symmetric
    std::vector<int> deficit;        // uncovered pairs touching each colour
    long long uncovered = 0;
    long long potential = 0;  // in-line cell pairs that can still witness

    // frequency envelope; feasible frequencies form the interval [lmin,lmax]
    int lmin = 1, lmax = 0;
    std::vector<int> cur_lb;  // per used colour; unused colours count at lmin
    long long lower_total = 0;

    // lemma-mode commitments
    std::vector<int8_t> commit;  // 0 open, 1 closed at 2, 2 must grow to 3+
    std::vector<int> commit_lb;
    std::vector<Color> closed2;
    std::vector<int> r2_share, c2_share;  // closed-2 shares per line pair
    int committed = 0;

    // control
    SharedControl* ctl = nullptr;
    std::mt19937_64 rng;
    uint64_t local_nodes = 0;
    PruneCounters prunes;
    std::function<bool(const ColorMatrix&)> on_witness;

    // frontier collection for the parallel split
    int split_cell = -1;
    std::vector<Decision> trail;
    std::vector<std::vector<Decision>>* frontier = nullptr;

    void init(int p_, int q_, int k_, bool symmetry_, bool lemma_, uint64_t seed) {
        p = p_;
        q = q_;
        k = k_;
        T = p * q;
        symmetry = symmetry_;
        lemma = lemma_;
        grid.assign(static_cast<size_t>(T), kUnassigned);
        row_mask.assign(p, 0);
        col_mask.assign(q, 0);
        row_cnt.assign(p, 0);
        col_cnt.assign(q, 0);
        freq.assign(k + 1, 0);
        pos_stride = std::min(p, q);
        cell_pos_flat.assign(static_cast<size_t>(k + 1) * pos_stride, -1);
        used = 0;
        pair_cnt.assign(static_cast<size_t>(k + 1) * (k + 1), 0);
        deficit.assign(k + 1, k - 1);
        uncovered = static_cast<long long>(k) * (k - 1) / 2;
        potential = static_cast<long long>(p) * q * (q - 1) / 2 +
                    static_cast<long long>(q) * p * (p - 1) / 2;

        const auto feas = feasible_frequencies(p, q, k);
        if (feas.empty()) {
            lmin = 1;
            lmax = 0;  // root check prunes immediately
        } else {
            lmin = feas.front();
            lmax = feas.back();
        }
        cur_lb.assign(k + 1, lmin);
        lower_total = static_cast<long long>(k) * lmin;

        commit.assign(k + 1, 0);
        commit_lb.assign(k + 1, 0);
        closed2.clear();
        r2_share.assign(static_cast<size_t>(p) * p, 0);
        c2_share.assign(static_cast<size_t>(q) * q, 0);
        committed = 0;
        rng.seed(seed ^ 0x9e3779b97f4a7c15ULL);
        local_nodes = 0;
        prunes = {};
    }

    int cell_row(int t) const { return t % p; }
    int cell_col(int t) const { return t / p; }

    bool root_viable() {
        if (lmax == 0 || lower_total > T || static_cast<long long>(k) * lmax < T) {
            ++prunes.frequency_envelope;
            return false;
        }
        if (uncovered > potential) {
            ++prunes.coverage_potential;
            return false;
        }
        return true;
    }

    // --- incremental assignment --------------------------------------------

    void bump_pair(Color a, Color b) {
        uint16_t& x = pair_cnt[static_cast<size_t>(a) * (k + 1) + b];
        uint16_t& y = pair_cnt[static_cast<size_t>(b) * (k + 1) + a];
        if (x == 0) {
            --uncovered;
            --deficit[a];
            --deficit[b];
        }
        ++x;
        ++y;
    }

    void drop_pair(Color a, Color b) {
        uint16_t& x = pair_cnt[static_cast<size_t>(a) * (k + 1) + b];
        uint16_t& y = pair_cnt[static_cast<size_t>(b) * (k + 1) + a];
        --x;
        --y;
        if (x == 0) {
            ++uncovered;
            ++deficit[a];
            ++deficit[b];
        }
    }

    void place(int t, Color c) {
        const int i = cell_row(t), j = cell_col(t);
        grid[static_cast<size_t>(i) * q + j] = c;
        for (int jj = 0; jj < q; ++jj) {
            const Color d = grid[static_cast<size_t>(i) * q + jj];
            if (d != kUnassigned && jj != j) bump_pair(c, d);
        }
        for (int ii = 0; ii < p; ++ii) {
            const Color d = grid[static_cast<size_t>(ii) * q + j];
            if (d != kUnassigned && ii != i) bump_pair(c, d);
        }
        potential -= row_cnt[i] + col_cnt[j];
        ++row_cnt[i];
        ++col_cnt[j];
        row_mask[i] |= 1ULL << c;
        col_mask[j] |= 1ULL << c;
        cell_pos_flat[static_cast<size_t>(c) * pos_stride + freq[c]] = t;
        if (freq[c] == 0) {
            ++used;
            cur_lb[c] = lmin;  // lb of one copy equals lmin; lower_total unchanged
        } else {
            const int nlb = std::max({freq[c] + 1, lmin, commit_lb[c]});
            lower_total += nlb - cur_lb[c];
            cur_lb[c] = nlb;
        }
        ++freq[c];
        if (frontier) trail.push_back({Decision::Assign, t, c});
    }

    void unplace(int t, Color c) {
        if (frontier) trail.pop_back();
        const int i = cell_row(t), j = cell_col(t);
        --freq[c];
        if (freq[c] == 0) {
            --used;
            cur_lb[c] = lmin;
        } else {
            const int nlb = std::max({freq[c], lmin, commit_lb[c]});
            lower_total += nlb - cur_lb[c];
            cur_lb[c] = nlb;
        }
        row_mask[i] &= ~(1ULL << c);
        col_mask[j] &= ~(1ULL << c);
        --row_cnt[i];
        --col_cnt[j];
        potential += row_cnt[i] + col_cnt[j];
        grid[static_cast<size_t>(i) * q + j] = kUnassigned;
        for (int jj = 0; jj < q; ++jj) {
            const Color d = grid[static_cast<size_t>(i) * q + jj];
            if (d != kUnassigned && jj != j) drop_pair(c, d);
        }
        for (int ii = 0; ii < p; ++ii) {
            const Color d = grid[static_cast<size_t>(ii) * q + j];
            if (d != kUnassigned && ii != i) drop_pair(c, d);
        }
    }

    // --- finality of colours -------------------------------------------------

    // Colours present in every row still reachable within the current column
    // (or in the column itself) cannot be placed there again.
    uint64_t blocked_mask(int t_next) const {
        if (t_next >= T) return ~0ULL;
        uint64_t m = ~0ULL;
        const int j = cell_col(t_next);
        for (int ii = cell_row(t_next); ii < p; ++ii) m &= row_mask[ii];
        return m | col_mask[j];
    }

    bool env_can_grow(Color c) const {
        if (freq[c] >= lmax) return false;
        const int nlb = std::max({freq[c] + 1, lmin, commit_lb[c]});
        return lower_total - cur_lb[c] + nlb <= T;
    }

    bool pos_can_grow(Color c, int t_next, uint64_t blocked) const {
        if (t_next >= T) return false;
        if (cell_col(t_next) < q - 1 && freq[c] < p) return true;
        return !((blocked >> c) & 1ULL);
    }

    // Final: the colour can receive no further copies in any completion.
    bool is_final(Color c, int t_next, uint64_t blocked) const {
        if (freq[c] == 0) return false;
        if (commit[c] == 1) return true;
        return !(env_can_grow(c) && pos_can_grow(c, t_next, blocked));
    }

    bool needs_growth(Color c) const { return freq[c] > 0 && freq[c] < cur_lb[c]; }

    // A final colour's uncovered pairs can only be witnessed by placements
    // inside its own lines; unassigned cells there bound them from above.
    bool final_slack_ok(Color c) {
        if (deficit[c] == 0) return true;
        int slots = 0;
        for (int u = 0; u < freq[c]; ++u) {
            const int t = cell_pos(c, u);
            slots += (q - row_cnt[cell_row(t)]) + (p - col_cnt[cell_col(t)]);
        }
        if (deficit[c] > slots) {
            ++prunes.coverage_potential;
            return false;
        }
        return true;
    }

    bool dead_pair_against(Color c, int t_next, uint64_t blocked) {
        for (Color d = 1; d <= k; ++d) {
            if (d == c || freq[d] == 0) continue;
            if (pair_cnt[static_cast<size_t>(c) * (k + 1) + d] == 0 &&
                is_final(d, t_next, blocked)) {
                ++prunes.dead_pair;
                return true;
            }
        }
        return false;
    }

    // Column-boundary sweep: stuck growers and dead pairs among finals.
    bool sweep_dead(int t_next) {
        const uint64_t blocked = blocked_mask(t_next);
        std::array<Color, kMaxColors + 1> finals{};
        int nf = 0;
        for (Color c = 1; c <= k; ++c) {
            if (freq[c] == 0) continue;
            const bool growable = env_can_grow(c) && pos_can_grow(c, t_next, blocked);
            if (needs_growth(c) && !growable) {
                ++prunes.grow_blocked;
                return true;
            }
            if (commit[c] == 1 || !growable) {
                if (!final_slack_ok(c)) return true;
                finals[nf++] = c;
            }
        }
        for (int a = 0; a < nf; ++a)
            for (int b = a + 1; b < nf; ++b)
                if (pair_cnt[static_cast<size_t>(finals[a]) * (k + 1) + finals[b]] == 0) {
                    ++prunes.dead_pair;
                    return true;
                }
        return false;
    }

    // --- lemma-mode structure checks ------------------------------------------

    static bool same_two(int a1, int a2, int b1, int b2) {
        return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
    }

    // The four banned pair signatures are exactly: one side of the 2+2 cell
    // pattern fully shared, the other side not.
    bool forbidden_pair_shape(Color c, Color d) const {
        const int c1 = cell_pos(c, 0), c2 = cell_pos(c, 1);
        const int d1 = cell_pos(d, 0), d2 = cell_pos(d, 1);
        const bool rows_full =
            same_two(cell_row(c1), cell_row(c2), cell_row(d1), cell_row(d2));
        const bool cols_full =
            same_two(cell_col(c1), cell_col(c2), cell_col(d1), cell_col(d2));
        return rows_full != cols_full;
    }

    bool triple_is_321(Color a, Color b, Color c) const {
        std::array<int, 6> rows{}, cols{};
        int idx = 0;
        for (Color x : {a, b, c}) {
            for (int u = 0; u < 2; ++u) {
                rows[idx] = cell_row(cell_pos(x, u));
                cols[idx] = cell_col(cell_pos(x, u));
                ++idx;
            }
        }
        auto shape_is_321 = [](std::array<int, 6>& v) {
            std::sort(v.begin(), v.end());
            std::array<int, 4> runs{};
            int nr = 0;
            for (int i = 0; i < 6;) {
                int j = i;
                while (j < 6 && v[j] == v[i]) ++j;
                if (nr == 3) return false;
                runs[nr++] = j - i;
                i = j;
            }
            if (nr != 3) return false;
            std::sort(runs.begin(), runs.begin() + 3);
            return runs[0] == 1 && runs[1] == 2 && runs[2] == 3;
        };
        return shape_is_321(rows) && shape_is_321(cols);
    }

    // Committed 2-colour structure vs the first-row q-sequence catalogue.
    // Valid only once every colour is committed.
    bool q_structure_feasible() const {
        std::vector<TwoColorPlacement> placed;
        placed.reserve(closed2.size());
        for (Color c : closed2) {
            const int t1 = cell_pos(c, 0), t2 = cell_pos(c, 1);
            placed.push_back({cell_row(t1), cell_col(t1), cell_row(t2), cell_col(t2)});
        }
        return two_structure_admissible(placed);
    }

    // --- commitments -----------------------------------------------------------

    void commit_close_state(Color c) {
        const int t1 = cell_pos(c, 0), t2 = cell_pos(c, 1);
        const int r1 = std::min(cell_row(t1), cell_row(t2));
        const int r2i = std::max(cell_row(t1), cell_row(t2));
        const int s1 = std::min(cell_col(t1), cell_col(t2));
        const int s2 = std::max(cell_col(t1), cell_col(t2));
        commit[c] = 1;
        ++committed;
        closed2.push_back(c);
        r2_share[static_cast<size_t>(r1) * p + r2i]++;
        c2_share[static_cast<size_t>(s1) * q + s2]++;
    }

    void undo_close(Color c) {
        const int t1 = cell_pos(c, 0), t2 = cell_pos(c, 1);
        const int r1 = std::min(cell_row(t1), cell_row(t2));
        const int r2i = std::max(cell_row(t1), cell_row(t2));
        const int s1 = std::min(cell_col(t1), cell_col(t2));
        const int s2 = std::max(cell_col(t1), cell_col(t2));
        r2_share[static_cast<size_t>(r1) * p + r2i]--;
        c2_share[static_cast<size_t>(s1) * q + s2]--;
        closed2.pop_back();
        --committed;
        commit[c] = 0;
    }

    bool close_checks(Color c, int t_next) {
        const int t1 = cell_pos(c, 0), t2 = cell_pos(c, 1);
        const int r1 = std::min(cell_row(t1), cell_row(t2));
        const int r2i = std::max(cell_row(t1), cell_row(t2));
        const int s1 = std::min(cell_col(t1), cell_col(t2));
        const int s2 = std::max(cell_col(t1), cell_col(t2));
        if (r2_share[static_cast<size_t>(r1) * p + r2i] > 2 ||
            c2_share[static_cast<size_t>(s1) * q + s2] > 2) {
            ++prunes.share_cap;
            return false;
        }
        for (size_t a = 0; a + 1 < closed2.size(); ++a)
            if (forbidden_pair_shape(c, closed2[a])) {
                ++prunes.forbidden_type;
                return false;
            }
        for (size_t a = 0; a + 1 < closed2.size(); ++a)
            for (size_t b = a + 1; b + 1 < closed2.size(); ++b)
                if (triple_is_321(c, closed2[a], closed2[b])) {
                    ++prunes.forbidden_type;
                    return false;
                }
        const uint64_t blocked = blocked_mask(t_next);
        if (dead_pair_against(c, t_next, blocked)) return false;
        if (committed == k && !q_structure_feasible()) {
            ++prunes.q_sequence;
            return false;
        }
        return true;
    }

    void commit_grow_state(Color c) {
        commit[c] = 2;
        ++committed;
        commit_lb[c] = 3;
        const int nlb = std::max({freq[c], lmin, 3});
        lower_total += nlb - cur_lb[c];
        cur_lb[c] = nlb;
    }

    void undo_grow(Color c) {
        commit_lb[c] = 0;
        const int nlb = std::max(freq[c], lmin);
        lower_total += nlb - cur_lb[c];
        cur_lb[c] = nlb;
        --committed;
        commit[c] = 0;
    }

    bool grow_checks(Color c, int t_next) {
        if (lower_total > T) {
            ++prunes.frequency_envelope;
            return false;
        }
        const uint64_t blocked = blocked_mask(t_next);
        if (freq[c] < 3 && !(env_can_grow(c) && pos_can_grow(c, t_next, blocked))) {
            ++prunes.grow_blocked;
            return false;
        }
        if (committed == k && !q_structure_feasible()) {
            ++prunes.q_sequence;
            return false;
        }
        return true;
    }

    // --- the walk ----------------------------------------------------------------

    Walk dfs(int t, Color pending) {
        ++local_nodes;
        if ((local_nodes & 255) == 0) {
            ctl->nodes.fetch_add(256, std::memory_order_relaxed);
            if (ctl->stop.load(std::memory_order_relaxed)) return Walk::Abort;
            if (ctl->out_of_budget()) return Walk::Abort;
        }

        if (t == T) {
            // totality closes every colour; completeness is the verdict
            if (uncovered != 0) return Walk::Exhausted;
            ColorMatrix m(p, q, k);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < q; ++j)
                    m.at(i, j) = grid[static_cast<size_t>(i) * q + j];
            if (!in_family(m, p, q, k))
                throw std::logic_error("search produced an invalid witness");
            return on_witness(m) ? Walk::Exhausted : Walk::Stop;
        }

        if (pending != kUnassigned) {
            // branch on the final frequency of a colour that just hit 2
            commit_close_state(pending);
            if (close_checks(pending, t)) {
                if (frontier) trail.push_back({Decision::CommitClose, t, pending});
                const Walk w = dfs(t, kUnassigned);
                if (frontier) trail.pop_back();
                if (w != Walk::Exhausted) {
                    undo_close(pending);
                    return w;
                }
            }
            undo_close(pending);

            commit_grow_state(pending);
            if (grow_checks(pending, t)) {
                if (frontier) trail.push_back({Decision::CommitGrow, t, pending});
                const Walk w = dfs(t, kUnassigned);
                if (frontier) trail.pop_back();
                if (w != Walk::Exhausted) {
                    undo_grow(pending);
                    return w;
                }
            }
            undo_grow(pending);
            return Walk::Exhausted;
        }

        if (t == split_cell && frontier) {
            frontier->push_back(trail);
            return Walk::Exhausted;
        }

        if (t % p == 0 && sweep_dead(t)) return Walk::Exhausted;

        const int i = cell_row(t), j = cell_col(t);
        const uint64_t taken = row_mask[i] | col_mask[j];
        // first row must ascend in first-occurrence order (ids encode it);
        // the ceiling keeps room for the columns still to come
        const Color floor_color =
            (symmetry && i == 0 && j > 0) ? grid[static_cast<size_t>(j - 1)] : 0;
        const Color ceil_color =
            (symmetry && i == 0) ? static_cast<Color>(k - (q - 1 - j)) : k;

        // used colours ordered by uncovered-pair coverage, seeded tie shuffle,
        // then the single lowest unused colour
        std::array<std::pair<uint64_t, Color>, kMaxColors> order{};
        int n_cand = 0;
        for (Color c = 1; c <= k; ++c) {
            if (freq[c] == 0) continue;
            if ((taken >> c) & 1ULL) continue;
            if (commit[c] == 1) continue;
            if (c <= floor_color || c > ceil_color) continue;
            if (freq[c] >= lmax) continue;
            const int nlb = std::max({freq[c] + 1, lmin, commit_lb[c]});
            if (lower_total - cur_lb[c] + nlb > T) continue;
            const uint64_t key =
                (static_cast<uint64_t>(deficit[c]) << 32) | (rng() & 0xffffffffULL);
            order[n_cand++] = {key, c};
        }
        std::sort(order.begin(), order.begin() + n_cand);

        std::array<Color, kMaxColors + 1> cand{};
        int n_total = 0;
        for (int x = 0; x < n_cand; ++x) cand[n_total++] = order[x].second;
        if (used < k) {
            if (symmetry) {
                const Color fresh = used + 1;
                if (!((taken >> fresh) & 1ULL) && fresh > floor_color &&
                    fresh <= ceil_color)
                    cand[n_total++] = fresh;
            } else {
                for (Color c = 1; c <= k; ++c)
                    if (freq[c] == 0 && !((taken >> c) & 1ULL)) cand[n_total++] = c;
            }
        }

        for (int x = 0; x < n_total; ++x) {
            const Color c = cand[x];
            place(t, c);
            bool ok = true;
            if (uncovered > potential) {
                ++prunes.coverage_potential;
                ok = false;
            }
            if (ok) {
                const uint64_t blocked = blocked_mask(t + 1);
                if (is_final(c, t + 1, blocked) &&
                    (!final_slack_ok(c) || dead_pair_against(c, t + 1, blocked)))
                    ok = false;
            }
            if (ok) {
                Color next_pending = kUnassigned;
                if (lemma && freq[c] == 2 && commit[c] == 0) next_pending = c;
                const Walk w = dfs(t + 1, next_pending);
                if (w != Walk::Exhausted) {
                    unplace(t, c);
                    return w;
                }
            }
            unplace(t, c);
        }
        return Walk::Exhausted;
    }

    // Replays a decision prefix; false means the prefix itself fails a check
    // and the task holds no completions.
    bool replay(const std::vector<Decision>& decisions) {
        for (const auto& d : decisions) {
            switch (d.kind) {
                case Decision::Assign: {
                    place(d.cell, d.color);
                    if (uncovered > potential) return false;
                    break;
                }
                case Decision::CommitClose: {
                    commit_close_state(d.color);
                    if (!close_checks(d.color, d.cell)) return false;
                    break;
                }
                case Decision::CommitGrow: {
                    commit_grow_state(d.color);
                    if (!grow_checks(d.color, d.cell)) return false;
                    break;
                }
            }
        }
        return true;
    }
};

struct RunResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<ColorMatrix> witness;
    uint64_t nodes = 0;
    PruneCounters prunes;
};

// Sequential walk, or a frontier split across parallel_width workers.
RunResult run_search(int p, int q, int k, bool symmetry, bool lemma,
                     const SearchConfig& cfg, bool first_witness_only,
                     const std::function<bool(const ColorMatrix&)>& sink) {
    SharedControl ctl;
    ctl.node_budget = cfg.node_budget;
    if (cfg.time_budget > 0) {
        ctl.has_deadline = true;
        ctl.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(cfg.time_budget));
    }

    std::mutex sink_mutex;
    std::optional<ColorMatrix> found;
    auto witness_cb = [&](const ColorMatrix& m) -> bool {
        std::lock_guard<std::mutex> g(sink_mutex);
        if (!found) found = m;
        const bool keep_going = sink ? sink(m) : false;
        if (first_witness_only || !keep_going) {
            ctl.stop.store(true);
            return false;
        }
        return true;
    };

    const int width = std::max(1, cfg.parallel_width);
    uint64_t total_nodes = 0;
    PruneCounters prunes;
    bool aborted = false;

    if (width == 1) {
        Engine eng;
        eng.init(p, q, k, symmetry, lemma, cfg.seed);
        eng.ctl = &ctl;
        eng.on_witness = witness_cb;
        Walk w = Walk::Exhausted;
        if (eng.root_viable()) w = eng.dfs(0, kUnassigned);
        total_nodes = eng.local_nodes;
        prunes = eng.prunes;
        aborted = (w == Walk::Abort) && ctl.budget_hit.load();
    } else {
        Engine probe;
        probe.init(p, q, k, symmetry, lemma, cfg.seed);
        probe.ctl = &ctl;
        probe.on_witness = witness_cb;
        std::vector<std::vector<Decision>> tasks;
        probe.frontier = &tasks;
        probe.split_cell = std::min(2 * p, p * q);  // two columns of frontier
        Walk w = Walk::Exhausted;
        if (probe.root_viable()) w = probe.dfs(0, kUnassigned);
        total_nodes += probe.local_nodes;
        prunes += probe.prunes;
        aborted = (w == Walk::Abort) && ctl.budget_hit.load();

        if (!aborted && !ctl.stop.load()) {
            std::atomic<size_t> next{0};
            std::atomic<bool> any_abort{false};
            std::mutex agg_mutex;
            auto worker = [&](int wid) {
                uint64_t nodes_here = 0;
                PruneCounters pr_here;
                Engine eng;
                for (;;) {
                    const size_t idx = next.fetch_add(1);
                    if (idx >= tasks.size()) break;
                    if (ctl.stop.load()) break;
                    eng.init(p, q, k, symmetry, lemma,
                             cfg.seed + 0x9e3779b97f4a7c15ULL * (wid + 1));
                    eng.ctl = &ctl;
                    eng.on_witness = witness_cb;
                    if (eng.replay(tasks[idx])) {
                        const int start = static_cast<int>(count_assigns(tasks[idx]));
                        const Walk ww = eng.dfs(start, kUnassigned);
                        if (ww == Walk::Abort && ctl.budget_hit.load()) any_abort = true;
                    }
                    nodes_here += eng.local_nodes;
                    pr_here += eng.prunes;
                }
                std::lock_guard<std::mutex> g(agg_mutex);
                total_nodes += nodes_here;
                prunes += pr_here;
            };
            std::vector<std::thread> pool;
            for (int wdx = 0; wdx < width; ++wdx) pool.emplace_back(worker, wdx);
            for (auto& th : pool) th.join();
            aborted = any_abort.load();
        }
    }

    RunResult res;
    res.nodes = total_nodes;
    res.prunes = prunes;
    if (found) {
        res.status = SearchStatus::Found;
        res.witness = std::move(found);
    } else if (aborted || ctl.budget_hit.load()) {
        res.status = SearchStatus::BudgetExceeded;
    } else {
        res.status = SearchStatus::Exhausted;
    }
    return res;
}

}  // namespace

SearchOutcome find_coloring(int p, int q, int k, const SearchConfig& config) {
    if (p < 1 || p > q) throw std::invalid_argument("find_coloring: need 1 <= p <= q");
    if (k < 1 || k > kMaxColors)
        throw std::invalid_argument("find_coloring: palette size out of range");
    if (config.use_lemma_pruning && Instance{p, q, k} != kRuleScope)
        throw std::invalid_argument(
            "lemma pruning is proven only for the 6x7 grid with 19 colours");

    const auto start = Clock::now();
    RunResult r = run_search(p, q, k, /*symmetry=*/true, config.use_lemma_pruning, config,
                             /*first_witness_only=*/true, nullptr);
    SearchOutcome out;
    out.status = r.status;
    out.witness = std::move(r.witness);
    out.nodes_expanded = r.nodes;
    out.prunes = r.prunes;
    out.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

AchromaticResult achromatic(int p, int q, const SearchConfig& config) {
    if (p < 1 || p > q) throw std::invalid_argument("achromatic: need 1 <= p <= q");
    const auto start = Clock::now();
    AchromaticResult res;
    res.upper = upper_bound_colors(p, q);
    res.value = q;  // the chromatic number is always feasible
    int best_found = 0;
    for (int k = q; k <= res.upper; ++k) {
        // time and node budgets span the whole ascent
        SearchConfig probe_cfg = config;
        if (config.time_budget > 0) {
            const double left =
                config.time_budget -
                std::chrono::duration<double>(Clock::now() - start).count();
            if (left <= 0) {
                res.exact = false;
                res.value = best_found > 0 ? best_found : q;
                res.wall_time =
                    std::chrono::duration<double>(Clock::now() - start).count();
                return res;
            }
            probe_cfg.time_budget = left;
        }
        if (config.node_budget > 0) {
            if (res.nodes_expanded >= config.node_budget) {
                res.exact = false;
                res.value = best_found > 0 ? best_found : q;
                res.wall_time =
                    std::chrono::duration<double>(Clock::now() - start).count();
                return res;
            }
            probe_cfg.node_budget = config.node_budget - res.nodes_expanded;
        }
        SearchOutcome probe = find_coloring(p, q, k, probe_cfg);
        res.nodes_expanded += probe.nodes_expanded;
        if (probe.status == SearchStatus::Found) {
            best_found = k;
            res.value = k;
            res.witness = std::move(probe.witness);
            continue;
        }
        if (probe.status == SearchStatus::Exhausted) {
            if (k == q)
                throw std::logic_error("achromatic: chromatic-size colouring not found");
            res.exact = true;
            res.upper = res.value;
            res.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
            return res;
        }
        // a budget-limited probe turns the answer into a bracket
        res.exact = false;
        res.value = best_found > 0 ? best_found : q;
        res.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
    }
    res.exact = true;
    res.upper = res.value;
    res.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

SearchOutcome refute(const SearchConfig& config) {
    return find_coloring(kRuleScope.rows, kRuleScope.cols, kRuleScope.palette, config);
}

uint64_t for_each_coloring(int p, int q, int k, const EnumerateOptions& opts,
                           const std::function<bool(const ColorMatrix&)>& fn) {
    if (p < 1 || p > q || k < 1 || k > kMaxColors)
        throw std::invalid_argument("for_each_coloring: bad instance");
    SearchConfig cfg;
    cfg.node_budget = opts.node_budget;
    cfg.seed = opts.seed;
    uint64_t n = 0;
    run_search(p, q, k, opts.symmetry_breaking, /*lemma=*/false, cfg,
               /*first_witness_only=*/false, [&](const ColorMatrix& m) {
                   ++n;
                   return fn(m);
               });
    return n;
}

ExtendOutcome extend_coloring(const ColorMatrix& m) {
    ExtendOutcome out;
    if (!m.well_formed()) {
        out.error = "malformed matrix";
        return out;
    }
    if (!m.total()) {
        out.error = "matrix not total";
        return out;
    }
    if (!is_proper(m)) {
        out.error = "matrix not proper";
        return out;
    }
    const int p = m.rows, q = m.cols, k = m.palette;

    // row -> colour assignment for the fresh column via augmenting paths
    std::vector<std::vector<Color>> cand(p);
    for (int i = 0; i < p; ++i) {
        std::vector<char> in_row(static_cast<size_t>(k) + 1, 0);
        for (int j = 0; j < q; ++j) in_row[m.at(i, j)] = 1;
        for (Color c = 1; c <= k; ++c)
            if (!in_row[c]) cand[i].push_back(c);
    }
    std::vector<int> owner(static_cast<size_t>(k) + 1, -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, int row) -> bool {
        for (Color c : cand[row]) {
            if (seen[c]) continue;
            seen[c] = 1;
            if (owner[c] < 0 || self(self, owner[c])) {
                owner[c] = row;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < p; ++i) {
        seen.assign(static_cast<size_t>(k) + 1, 0);
        if (!augment(augment, i)) {
            out.error = "no valid column: cannot pick distinct unused colours per row";
            return out;
        }
    }

    ColorMatrix ext(p, q + 1, k);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) ext.at(i, j) = m.at(i, j);
    for (Color c = 1; c <= k; ++c)
        if (owner[c] >= 0) ext.at(owner[c], q) = c;

    const FamilyCheck chk = check_family(ext, p, q + 1, k);
    if (chk != FamilyCheck::Ok) {
        out.error = std::string("extension failed verification: ") + to_string(chk);
        return out;
    }
    out.ok = true;
    out.matrix = std::move(ext);
    return out;
}

AuditReport audit_lemma_cuts(uint64_t cuts_wanted, uint64_t seed, int max_suffix_cells) {
    const int p = kRuleScope.rows, q = kRuleScope.cols, k = kRuleScope.palette;
    const int T = p * q;
    max_suffix_cells = std::clamp(max_suffix_cells, 1, 12);
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    AuditReport report;
    SharedControl ctl;

    while (report.sampled_cuts < cuts_wanted) {
        ++report.samples_drawn;
        const int suffix = 1 + static_cast<int>(rng() % max_suffix_cells);
        const int fill = T - suffix;

        // random proper partial assignment over the scan prefix
        Engine eng;
        eng.init(p, q, k, /*symmetry=*/false, /*lemma=*/false, rng());
        eng.ctl = &ctl;
        bool dead = false;
        for (int t = 0; t < fill && !dead; ++t) {
            const int i = t % p, j = t / p;
            const uint64_t taken = eng.row_mask[i] | eng.col_mask[j];
            std::array<Color, kMaxColors> legal{};
            int n = 0;
            for (Color c = 1; c <= k; ++c)
                if (!((taken >> c) & 1ULL)) legal[n++] = c;
            if (n == 0) {
                dead = true;
                break;
            }
            eng.place(t, legal[rng() % n]);
        }
        if (dead) continue;

        // commitments implied by the sample: every frequency-2 colour closed
        std::vector<Color> closed;
        for (Color c = 1; c <= k; ++c)
            if (eng.freq[c] == 2) closed.push_back(c);

        // would a lemma rule cut this node?
        bool fires = false;
        std::vector<int> rshare(static_cast<size_t>(p) * p, 0),
            cshare(static_cast<size_t>(q) * q, 0);
        for (Color c : closed) {
            const int t1 = eng.cell_pos(c, 0), t2 = eng.cell_pos(c, 1);
            const int r1 = std::min(t1 % p, t2 % p), r2i = std::max(t1 % p, t2 % p);
            const int s1 = std::min(t1 / p, t2 / p), s2 = std::max(t1 / p, t2 / p);
            if (++rshare[static_cast<size_t>(r1) * p + r2i] > 2) fires = true;
            if (++cshare[static_cast<size_t>(s1) * q + s2] > 2) fires = true;
        }
        for (size_t a = 0; a < closed.size() && !fires; ++a)
            for (size_t b = a + 1; b < closed.size() && !fires; ++b)
                if (eng.forbidden_pair_shape(closed[a], closed[b])) fires = true;
        for (size_t a = 0; a < closed.size() && !fires; ++a)
            for (size_t b = a + 1; b < closed.size() && !fires; ++b)
                for (size_t c = b + 1; c < closed.size() && !fires; ++c)
                    if (eng.triple_is_321(closed[a], closed[b], closed[c])) fires = true;
        if (!fires) continue;

        ++report.sampled_cuts;

        // replay: exhaust the suffix generically with the closures frozen
        for (Color c : closed) eng.commit[c] = 1;
        bool completion = false;
        eng.on_witness = [&](const ColorMatrix&) {
            completion = true;
            return false;
        };
        if (eng.uncovered <= eng.potential && eng.lower_total <= eng.T)
            eng.dfs(fill, kUnassigned);
        if (completion)
            ++report.refuted;
        else
            ++report.confirmed;
    }
    return report;
}

}  // namespace achro
