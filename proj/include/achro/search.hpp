#ifndef ACHRO_SEARCH_HPP
#define ACHRO_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "achro/lemmas.hpp"
#include "achro/matrix.hpp"

namespace achro {

struct SearchConfig {
    double time_budget = 0;         // seconds, 0 = unlimited
    uint64_t node_budget = 0;       // expansions, 0 = unlimited
    bool use_lemma_pruning = false; // legal only for the 6x7/19 instance
    int parallel_width = 1;         // worker count; 1 = strictly sequential
    uint64_t seed = 0;              // value-order tie shuffling
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
const char* to_string(SearchStatus s);

struct PruneCounters {
    uint64_t coverage_potential = 0;  // uncovered pairs exceed remaining slots
    uint64_t frequency_envelope = 0;  // no feasible profile dominates the state
    uint64_t dead_pair = 0;           // two finalized colours sharing no line
    uint64_t grow_blocked = 0;        // a colour that must grow no longer can
    uint64_t forbidden_type = 0;      // closed 2-colour set matches a banned type
    uint64_t share_cap = 0;           // row/column 2-colour share above 2
    uint64_t q_sequence = 0;          // committed 2-structure admits no q-sequence
    PruneCounters& operator+=(const PruneCounters& o);
    uint64_t total() const;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<ColorMatrix> witness;
    uint64_t nodes_expanded = 0;
    double wall_time = 0;
    PruneCounters prunes;
};

// Depth-first search over cells in column-major order with incremental
// pair-coverage and frequency-profile pruning plus prefix symmetry breaking.
// Exhausted means no total proper complete k-colouring of K_p x K_q exists.
// Pre: 1 <= p <= q, 1 <= k <= 62.
SearchOutcome find_coloring(int p, int q, int k, const SearchConfig& config = {});

struct AchromaticResult {
    bool exact = false;
    int value = 0;                  // exact value, or largest k found feasible
    int upper = 0;                  // sound upper bound (== value when exact)
    std::optional<ColorMatrix> witness;
    uint64_t nodes_expanded = 0;
    double wall_time = 0;
};

// Linear ascent from k = q (the chromatic number); valid because feasible
// palette sizes form an interval.  Any budget-exceeded probe turns the
// result into the bracket [value, upper].  Pre: p <= q.
AchromaticResult achromatic(int p, int q, const SearchConfig& config = {});

// Exhaustive search for the hypothetical 19-colouring of the 6x7 grid.
// Exhausted refutes the hypothesis; Found would contradict it and is
// treated as a bug alarm by callers.
SearchOutcome refute(const SearchConfig& config = {});

struct ExtendOutcome {
    bool ok = false;
    ColorMatrix matrix;
    std::string error;
};

// Appends one column, reusing palette colours chosen by row-to-colour
// matching; pair coverage is inherited.  Fails when no proper column exists
// or the extension does not verify.
ExtendOutcome extend_coloring(const ColorMatrix& m);

// --- test and diagnostic surface ----------------------------------------

struct EnumerateOptions {
    bool symmetry_breaking = true;
    uint64_t node_budget = 0;
    uint64_t seed = 0;
};

// Visits every witness (every solution of the possibly symmetry-reduced
// tree); fn returning false stops the walk.  Returns witness count.
uint64_t for_each_coloring(int p, int q, int k, const EnumerateOptions& opts,
                           const std::function<bool(const ColorMatrix&)>& fn);

struct AuditReport {
    uint64_t samples_drawn = 0;  // random deep partial assignments examined
    uint64_t sampled_cuts = 0;   // samples on which a lemma rule fired
    uint64_t confirmed = 0;      // cut subtrees verified empty by replay
    uint64_t refuted = 0;        // completions surviving the replay (bug alarm)
};

// Soundness replay for the lemma pruners: samples random proper partial
// assignments of the 6x7/19 instance at most max_suffix_cells from total,
// keeps those a lemma rule would cut, and exhaustively re-searches the
// remainder with generic pruning only.
AuditReport audit_lemma_cuts(uint64_t cuts_wanted, uint64_t seed,
                             int max_suffix_cells = 8);

}  // namespace achro

#endif
