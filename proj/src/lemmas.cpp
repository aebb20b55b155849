#include "achro/lemmas.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "achro/bounds.hpp"

namespace achro {

bool frequency_rules_hold(const FrequencyProfile& profile) {
    if (Instance{profile.rows, profile.cols, profile.palette} != kRuleScope)
        throw std::invalid_argument("frequency rules apply to the 6x7/19 instance only");
    const int c2 = profile.c(2);
    const int c3 = profile.c(3);
    const int c3p = profile.c_at_least(3);
    const int c4p = profile.c_at_least(4);
    const int c5p = profile.c_at_least(5);
    const long long tail = profile.weighted_sum(3);

    if (profile.c(1) != 0) return false;
    if (profile.c_at_least(7) != 0) return false;
    if (c2 < 15 || c2 > 18) return false;
    if (c3p < 1 || c3p > 4) return false;
    if (c4p > c2 - 15) return false;
    if (c4p == 0 && !(c3p == 4 && c3 == 4)) return false;
    if (c4p >= 1 && c3p > 3) return false;
    if (c3p + c4p > 4) return false;
    if (c5p >= 1 && c3p + c4p > 3) return false;
    if (tail < 6 || tail > 12) return false;
    return true;
}

bool verify_frequency_rules_universal() {
    const auto profiles = feasible_frequency_profiles(kRuleScope.rows, kRuleScope.cols,
                                                      kRuleScope.palette);
    if (profiles.empty()) return false;  // the hypothesis survives generic counting
    return std::all_of(profiles.begin(), profiles.end(), frequency_rules_hold);
}

const char* to_string(RuleId id) {
    switch (id) {
        case RuleId::PairType_1111_22: return "pair-type (1^4, 2^2)";
        case RuleId::PairType_211_22: return "pair-type (2^1 1^2, 2^2)";
        case RuleId::PairType_22_1111: return "pair-type (2^2, 1^4)";
        case RuleId::PairType_22_211: return "pair-type (2^2, 2^1 1^2)";
        case RuleId::TripleType_321_321: return "triple-type (3^1 2^1 1^1, 3^1 2^1 1^1)";
        case RuleId::RowShareOver2: return "row pair shares > 2 two-colours";
        case RuleId::ColShareOver2: return "column pair shares > 2 two-colours";
        case RuleId::RowShareOver3: return "row pair shares > 3 two-colours";
    }
    return "?";
}

const TypeSignature& forbidden_signature(RuleId id) {
    static const TypeSignature t1111_22{{1, 1, 1, 1}, {2, 2}};
    static const TypeSignature t211_22{{2, 1, 1}, {2, 2}};
    static const TypeSignature t22_1111{{2, 2}, {1, 1, 1, 1}};
    static const TypeSignature t22_211{{2, 2}, {2, 1, 1}};
    static const TypeSignature t321_321{{3, 2, 1}, {3, 2, 1}};
    switch (id) {
        case RuleId::PairType_1111_22: return t1111_22;
        case RuleId::PairType_211_22: return t211_22;
        case RuleId::PairType_22_1111: return t22_1111;
        case RuleId::PairType_22_211: return t22_211;
        case RuleId::TripleType_321_321: return t321_321;
        default: throw std::invalid_argument("rule has no type signature");
    }
}

std::span<const RuleId> forbidden_pair_rules() {
    static const std::array<RuleId, 4> rules{
        RuleId::PairType_1111_22,
        RuleId::PairType_211_22,
        RuleId::PairType_22_1111,
        RuleId::PairType_22_211,
    };
    return rules;
}

std::vector<LemmaViolation> find_forbidden_type_violations(const ColorMatrix& m) {
    std::vector<LemmaViolation> out;
    const std::vector<Color> two = colors_with_frequency(m, 2);
    const size_t n = two.size();

    std::array<Color, 3> set{};
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            set[0] = two[a];
            set[1] = two[b];
            const TypeSignature sig = type_of(m, std::span<const Color>(set.data(), 2));
            for (RuleId rule : forbidden_pair_rules())
                if (sig == forbidden_signature(rule))
                    out.push_back({rule, {two[a], two[b]}, -1, -1});
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                set = {two[a], two[b], two[c]};
                const TypeSignature sig = type_of(m, set);
                if (sig == forbidden_signature(kForbiddenTripleRule))
                    out.push_back({kForbiddenTripleRule, {two[a], two[b], two[c]}, -1, -1});
            }
    return out;
}

std::vector<LemmaViolation> find_share_cap_violations(const ColorMatrix& m) {
    std::vector<LemmaViolation> out;
    for (int i1 = 0; i1 < m.rows; ++i1)
        for (int i2 = i1 + 1; i2 < m.rows; ++i2) {
            const int s = row_stats(m, i1, i2);
            if (s > 2) out.push_back({RuleId::RowShareOver2, {}, i1, i2});
            if (s > 3) out.push_back({RuleId::RowShareOver3, {}, i1, i2});
        }
    for (int j1 = 0; j1 < m.cols; ++j1)
        for (int j2 = j1 + 1; j2 < m.cols; ++j2) {
            const int s = col_stats(m, j1, j2);
            if (s > 2) out.push_back({RuleId::ColShareOver2, {}, j1, j2});
        }
    return out;
}

std::pair<int, int> pivot_range(int r2_max) {
    if (r2_max < 5 || r2_max > 7)
        throw std::invalid_argument("pivot_range: first-row 2-colour count must be in [5,7]");
    return {std::max(2, r2_max - 3), std::min(5, (r2_max + 4) / 2)};
}

bool QSequence::satisfies_constraints() const {
    const int first = first_index();
    if (first < 1 || static_cast<int>(values.size()) != 7 - first + 1) return false;
    int sum = 0;
    const int head_cap = std::min(3, r2_max + 4 - 2 * pivot);
    for (size_t idx = 0; idx < values.size(); ++idx) {
        const int j = first + static_cast<int>(idx);
        const int v = values[idx];
        if (v < 0 || v > 3) return false;
        if (j <= r2_max) {
            if (v < 1 || v > head_cap) return false;
            if (idx > 0 && first + static_cast<int>(idx) - 1 <= r2_max &&
                v > values[idx - 1])
                return false;  // head nonincreasing
        } else {
            if (j > std::max(first, r2_max + 1) && v > values[idx - 1])
                return false;  // tail nonincreasing
        }
        sum += v;
    }
    return sum == sum_target();
}

std::vector<QSequence> q_sequences(int r2_max, int pivot) {
    const auto [lo, hi] = pivot_range(r2_max);
    if (pivot < lo || pivot > hi)
        throw std::invalid_argument("q_sequences: pivot outside admissible range");

    QSequence cur{r2_max, pivot, {}};
    const int first = cur.first_index();
    const int len = 7 - first + 1;
    const int target = cur.sum_target();
    const int head_cap = std::min(3, r2_max + 4 - 2 * pivot);

    std::vector<QSequence> out;
    // values tried high to low, so output comes in decreasing lex order
    auto rec = [&](auto&& self, int idx, int sum) -> void {
        if (idx == len) {
            if (sum == target) out.push_back(cur);
            return;
        }
        const int j = first + idx;
        const bool head = j <= r2_max;
        int hi_v = head ? head_cap : 3;
        const int lo_v = head ? 1 : 0;
        const bool prev_same_segment = idx > 0 && (head || first + idx - 1 > r2_max);
        if (prev_same_segment) hi_v = std::min(hi_v, cur.values[idx - 1]);
        for (int v = hi_v; v >= lo_v; --v) {
            if (sum + v > target) continue;
            // cheap completion check: the rest can reach at most 3 each
            if (sum + v + 3 * (len - idx - 1) < target) break;
            cur.values.push_back(v);
            self(self, idx + 1, sum + v);
            cur.values.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool two_structure_admissible(std::span<const TwoColorPlacement> placements) {
    constexpr int p = 6, q = 7;
    static const auto catalogue = [] {
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> cat;
        for (int r2 = 5; r2 <= 7; ++r2) {
            const auto [lo, hi] = pivot_range(r2);
            for (int pv = lo; pv <= hi; ++pv) {
                std::vector<std::vector<int>> vals;
                for (const auto& s : q_sequences(r2, pv)) vals.push_back(s.values);
                std::sort(vals.begin(), vals.end());
                cat[{r2, pv}] = std::move(vals);
            }
        }
        return cat;
    }();

    std::array<int, p> per_row{};
    for (const auto& pl : placements) {
        per_row[pl.r1]++;
        per_row[pl.r2]++;
    }
    int m_row = 0;
    for (int i = 1; i < p; ++i)
        if (per_row[i] > per_row[m_row]) m_row = i;
    const int r2max = per_row[m_row];
    if (r2max < 5 || r2max > 7) return false;

    // pairwise shares with the max row give the pivot
    std::array<int, p> share_with_m{};
    for (const auto& pl : placements) {
        if (pl.r1 == m_row) share_with_m[pl.r2]++;
        if (pl.r2 == m_row) share_with_m[pl.r1]++;
    }
    int count2 = 0;
    for (int i = 0; i < p; ++i) {
        if (i == m_row) continue;
        if (share_with_m[i] > 2) return false;  // above the row share cap
        if (share_with_m[i] == 2) ++count2;
    }
    const int pivot = 2 + count2;
    const auto [lo, hi] = pivot_range(r2max);
    if (pivot < lo || pivot > hi) return false;

    std::array<int, q> qj{};
    std::array<int, q> head_partner;
    head_partner.fill(-1);
    for (const auto& pl : placements) {
        const bool in_m = pl.r1 == m_row || pl.r2 == m_row;
        if (!in_m) continue;
        qj[pl.c1]++;
        qj[pl.c2]++;
        if (pl.r1 == m_row)
            head_partner[pl.c1] = pl.r2;
        else
            head_partner[pl.c2] = pl.r1;
    }
    std::vector<int> rest_head, tail;
    for (int j = 0; j < q; ++j) {
        if (head_partner[j] < 0) {
            tail.push_back(qj[j]);
        } else if (share_with_m[head_partner[j]] == 2) {
            if (qj[j] != 2) return false;  // doubled columns count exactly 2
        } else {
            rest_head.push_back(qj[j]);
        }
    }
    std::sort(rest_head.rbegin(), rest_head.rend());
    std::sort(tail.rbegin(), tail.rend());
    rest_head.insert(rest_head.end(), tail.begin(), tail.end());
    const auto it = catalogue.find({r2max, pivot});
    if (it == catalogue.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), rest_head);
}

}  // namespace achro
