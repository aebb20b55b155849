#include "doctest.h"

#include <algorithm>
#include <set>

#include "achro/bounds.hpp"
#include "achro/search.hpp"
#include "achro/symmetry.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace achro;

TEST_CASE("single-row instances") {
    const SearchOutcome out = find_coloring(1, 3, 3);
    REQUIRE(out.status == SearchStatus::Found);
    REQUIRE(out.witness);
    CHECK(*out.witness == make_matrix({{1, 2, 3}}, 3));  // forced by symmetry breaking
}

TEST_CASE("the 4-cycle admits no complete 3-colouring") {
    CHECK(find_coloring(2, 2, 3).status == SearchStatus::Exhausted);
    CHECK(oracle::feasible_literal(2, 2, 3) == false);
}

TEST_CASE("witnesses verify on return") {
    for (auto [p, q, k] : {std::array<int, 3>{2, 3, 4}, {3, 3, 5}, {2, 4, 5}}) {
        const SearchOutcome out = find_coloring(p, q, k);
        REQUIRE(out.status == SearchStatus::Found);
        REQUIRE(out.witness);
        CHECK(in_family(*out.witness, p, q, k));
    }
}

TEST_CASE("statuses match the brute-force oracle up to 10 cells") {
    for (auto [p, q] : {std::pair<int, int>{1, 4}, {1, 6}, {2, 2}, {2, 3}, {2, 4},
                        {2, 5}, {3, 3}}) {
        const auto feas = oracle::feasible_palettes(p, q);
        for (int k = 1; k <= p * q; ++k) {
            const SearchOutcome out = find_coloring(p, q, k);
            REQUIRE(out.status != SearchStatus::BudgetExceeded);
            CHECK_MESSAGE((out.status == SearchStatus::Found) == (bool)feas[k],
                          "p=", p, " q=", q, " k=", k);
        }
    }
}

TEST_CASE("partition oracle agrees with literal enumeration on tiny grids") {
    for (auto [p, q] : {std::pair<int, int>{1, 3}, {2, 2}, {2, 3}}) {
        const auto feas = oracle::feasible_palettes(p, q);
        for (int k = 1; k <= p * q; ++k)
            CHECK((bool)feas[k] == oracle::feasible_literal(p, q, k));
    }
}

TEST_CASE("achromatic values at desk scale") {
    CHECK(achromatic(1, 5).value == 5);
    CHECK(achromatic(2, 2).value == 2);
    const AchromaticResult r23 = achromatic(2, 3);
    CHECK(r23.exact);
    CHECK(r23.value == oracle::achromatic_number(2, 3));
    CHECK(achromatic(3, 3).value == oracle::achromatic_number(3, 3));
    CHECK(achromatic(2, 4).value == oracle::achromatic_number(2, 4));
}

TEST_CASE("feasible palette sizes form an interval") {
    for (auto [p, q] : {std::pair<int, int>{1, 5}, {2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        const auto feas = oracle::feasible_palettes(p, q);
        int lo = 0, hi = 0;
        for (int k = 1; k <= p * q; ++k)
            if (feas[k]) {
                if (!lo) lo = k;
                hi = k;
            }
        CHECK(lo == q);  // the chromatic number
        for (int k = lo; k <= hi; ++k) CHECK(feas[k]);
    }
}

TEST_CASE("node budgets yield BUDGET_EXCEEDED, never a bogus verdict") {
    SearchConfig cfg;
    cfg.node_budget = 2000;
    const SearchOutcome out = find_coloring(6, 7, 19, cfg);
    CHECK(out.status == SearchStatus::BudgetExceeded);
    CHECK(out.nodes_expanded > 0);
}

TEST_CASE("deterministic replay with a fixed seed") {
    SearchConfig cfg;
    cfg.seed = 12345;
    const SearchOutcome a = find_coloring(3, 3, 5, cfg);
    const SearchOutcome b = find_coloring(3, 3, 5, cfg);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.status == b.status);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("symmetry breaking keeps one witness per class") {
    for (auto [p, q, k] : {std::array<int, 3>{2, 2, 2}, {2, 3, 3}, {2, 3, 4},
                           {3, 3, 4}, {3, 3, 5}, {2, 4, 4}, {2, 4, 5}}) {
        std::set<std::string> with, without;
        EnumerateOptions on, off;
        off.symmetry_breaking = false;
        for_each_coloring(p, q, k, on, [&](const ColorMatrix& m) {
            with.insert(format_matrix(canonical_form(m).matrix));
            return true;
        });
        for_each_coloring(p, q, k, off, [&](const ColorMatrix& m) {
            without.insert(format_matrix(canonical_form(m).matrix));
            return true;
        });
        CHECK_MESSAGE(with == without, "p=", p, " q=", q, " k=", k);
        CHECK_FALSE(with.empty());
    }
}

TEST_CASE("parallel width does not change the verdict") {
    SearchConfig wide;
    wide.parallel_width = 2;
    CHECK(find_coloring(3, 3, 5, wide).status == SearchStatus::Found);
    CHECK(find_coloring(2, 2, 3, wide).status == SearchStatus::Exhausted);
    CHECK(find_coloring(3, 4, 7, wide).status ==
          find_coloring(3, 4, 7).status);
}

TEST_CASE("lemma pruning is scoped to the 6x7/19 instance") {
    SearchConfig cfg;
    cfg.use_lemma_pruning = true;
    CHECK_THROWS_AS(find_coloring(6, 6, 18, cfg), std::invalid_argument);
    CHECK_THROWS_AS(find_coloring(2, 3, 4, cfg), std::invalid_argument);
}

TEST_CASE("refute stays within budget and never claims FOUND") {
    for (const bool lemmas : {false, true}) {
        SearchConfig cfg;
        cfg.node_budget = 50000;
        cfg.use_lemma_pruning = lemmas;
        cfg.seed = 7;
        const SearchOutcome out = refute(cfg);
        CHECK(out.status != SearchStatus::Found);
    }
}

TEST_CASE("extension by one column") {
    // each cell of the new column would need a colour outside its row
    const ExtendOutcome stuck = extend_coloring(make_matrix({{1, 2}, {2, 1}}, 2));
    CHECK_FALSE(stuck.ok);

    // palette slack makes the extension complete the colouring
    const ExtendOutcome row = extend_coloring(make_matrix({{1, 2}}, 3));
    REQUIRE(row.ok);
    CHECK(row.matrix == make_matrix({{1, 2, 3}}, 3));
    CHECK(in_family(row.matrix, 1, 3, 3));

    // a genuine witness extends and stays in the family
    const SearchOutcome base = find_coloring(3, 3, 5);
    REQUIRE(base.status == SearchStatus::Found);
    const ExtendOutcome ext = extend_coloring(*base.witness);
    REQUIRE(ext.ok);
    CHECK(in_family(ext.matrix, 3, 4, 5));
}

TEST_CASE("audit replays a handful of sampled cuts") {
    const AuditReport rep = audit_lemma_cuts(50, 2024);
    CHECK(rep.sampled_cuts == 50);
    CHECK(rep.confirmed == 50);
    CHECK(rep.refuted == 0);
}

TEST_CASE("a budget-limited ascent reports a bracket") {
    SearchConfig cfg;
    cfg.node_budget = 1;
    const AchromaticResult res = achromatic(6, 6, cfg);
    CHECK_FALSE(res.exact);
    CHECK(res.value >= 6);    // found so far, or the chromatic floor
    CHECK(res.value < 18);
    CHECK(res.upper == 18);   // counting bound
}

TEST_CASE("two independently found 18-witnesses: equivalence recorded") {
    SearchConfig a, b;
    a.seed = 1;
    b.seed = 2;
    a.time_budget = b.time_budget = 30;
    const SearchOutcome wa = find_coloring(6, 6, 18, a);
    const SearchOutcome wb = find_coloring(6, 6, 18, b);
    if (wa.status != SearchStatus::Found || wb.status != SearchStatus::Found)
        return;  // budget ran out; nothing to record
    REQUIRE(*wa.witness != *wb.witness);
    // whether all 18-colour members of the 6x6 family are equivalent is
    // open; record the observation, either answer is legal
    const bool equivalent = are_equivalent(*wa.witness, *wb.witness);
    MESSAGE("6x6 18-colour witnesses (seeds 1,2) equivalent: ", equivalent);
}
