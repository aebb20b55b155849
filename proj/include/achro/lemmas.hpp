#ifndef ACHRO_LEMMAS_HPP
#define ACHRO_LEMMAS_HPP

#include <span>
#include <utility>
#include <vector>

#include "achro/stats.hpp"

namespace achro {

// The structural rules below are proved only under the hypothesis of a
// complete 19-colouring of the 6x7 grid.  Search code must not apply them
// to any other instance.
struct Instance {
    int rows = 0;
    int cols = 0;
    int palette = 0;
    bool operator==(const Instance&) const = default;
};
inline constexpr Instance kRuleScope{6, 7, 19};

// The ten arithmetic facts a frequency profile of the hypothetical
// 19-colouring must satisfy (c_1 = 0, c_2 in [15,18], ..., the weighted
// tail sum in [6,12]).  Pre: profile instance is kRuleScope.
bool frequency_rules_hold(const FrequencyProfile& profile);

// Enumerates every vector (c_1..c_6) with sum 19, weighted sum 42 and
// excess-feasible support, and checks frequency_rules_hold on each.  True
// means the ten facts follow from the conservation laws alone.
bool verify_frequency_rules_universal();

enum class RuleId {
    PairType_1111_22,   // two 2-colours spanning 4 rows, sharing both columns
    PairType_211_22,    // row shape 2,1,1 with both columns shared
    PairType_22_1111,   // both rows shared, 4 distinct columns
    PairType_22_211,    // both rows shared, column shape 2,1,1
    TripleType_321_321, // three 2-colours of row and column shape 3,2,1
    RowShareOver2,      // more than two 2-colours common to a row pair
    ColShareOver2,      // more than two 2-colours common to a column pair
    RowShareOver3,      // row-pair share above the independent hard cap 3
};

const char* to_string(RuleId id);

// The signature a type rule forbids (valid for the five type rules only).
const TypeSignature& forbidden_signature(RuleId id);
std::span<const RuleId> forbidden_pair_rules();   // the four 2-set rules
inline constexpr RuleId kForbiddenTripleRule = RuleId::TripleType_321_321;

struct LemmaViolation {
    RuleId rule;
    std::vector<Color> colors;      // offending 2-colour set (type rules)
    int line_a = -1;                // offending line pair (share-cap rules)
    int line_b = -1;
};

// Scans every 2- and 3-element subset of the 2-colours of m and reports the
// subsets matching a forbidden signature.  Pre: m total and proper.
std::vector<LemmaViolation> find_forbidden_type_violations(const ColorMatrix& m);

// Reports every row pair sharing more than two 2-colours (plus the >3 hard
// cap separately) and every column pair sharing more than two.
std::vector<LemmaViolation> find_share_cap_violations(const ColorMatrix& m);

// Admissible pivot interval [max(2, r2-3), min(5, (r2+4)/2)] for the given
// first-row 2-colour count r2 in [5,7] (throws outside that range).
std::pair<int, int> pivot_range(int r2_max);

// A per-column count sequence (q_j) of first-row 2-colours, for j from
// 2*pivot-3 to 7, under the sum rule, per-index bounds and the
// nonincreasing head/tail normalization.
struct QSequence {
    int r2_max = 0;
    int pivot = 0;
    std::vector<int> values;

    int first_index() const { return 2 * pivot - 3; }
    int sum_target() const { return 2 * r2_max + 8 - 4 * pivot; }
    bool satisfies_constraints() const;
    bool operator==(const QSequence&) const = default;
};

// All sequences satisfying the constraints, in decreasing lexicographic
// order.  Pre: r2_max in [5,7], pivot in pivot_range(r2_max).
std::vector<QSequence> q_sequences(int r2_max, int pivot);

// One committed 2-colour: its two cells on the 6x7 grid, 0-based.
struct TwoColorPlacement {
    int r1, c1, r2, c2;
};

// Whether a fully committed 2-colour structure can belong to the
// hypothetical 19-colouring: picks a row of maximal 2-colour count,
// derives the pivot from the pairwise shares, and checks the per-column
// counts against the q-sequence catalogue (doubled columns must count
// exactly 2).  False is a sound cut for the refutation search.
bool two_structure_admissible(std::span<const TwoColorPlacement> placements);

}  // namespace achro

#endif
