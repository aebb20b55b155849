#include "doctest.h"

#include <random>
#include <sstream>

#include "achro/ledger.hpp"
#include "achro/matrix.hpp"
#include "achro/stats.hpp"

using namespace achro;

namespace {

ColorMatrix random_total_proper(int p, int q, int k, std::mt19937_64& rng) {
    // rejection fill; small sizes only
    for (;;) {
        ColorMatrix m(p, q, k);
        bool ok = true;
        for (int i = 0; i < p && ok; ++i)
            for (int j = 0; j < q && ok; ++j) {
                int legal[64], n = 0;
                for (Color c = 1; c <= k; ++c) {
                    bool clash = false;
                    for (int jj = 0; jj < j && !clash; ++jj)
                        if (m.at(i, jj) == c) clash = true;
                    for (int ii = 0; ii < i && !clash; ++ii)
                        if (m.at(ii, j) == c) clash = true;
                    if (!clash) legal[n++] = c;
                }
                if (n == 0)
                    ok = false;
                else
                    m.at(i, j) = legal[rng() % n];
            }
        if (ok) return m;
    }
}

}  // namespace

TEST_CASE("is_proper on small shapes") {
    CHECK(is_proper(make_matrix({{1}})));
    CHECK(is_proper(make_matrix({{1, 2}, {2, 1}}, 2)));
    CHECK_FALSE(is_proper(make_matrix({{1, 1}, {2, 1}}, 2)));
    // partial matrices: unassigned cells are ignored
    ColorMatrix partial(2, 2, 3);
    partial.at(0, 0) = 1;
    CHECK(is_proper(partial));
    partial.at(0, 1) = 1;
    CHECK_FALSE(is_proper(partial));
}

TEST_CASE("ledger counts and goodness") {
    const auto latin = make_matrix({{1, 2}, {2, 1}}, 2);
    const PairLedger led = build_ledger(latin);
    CHECK(led.count(1, 2) == 4);  // two rows and two columns witness {1,2}
    CHECK(led.row_count(1, 2) == 2);
    CHECK(led.col_count(1, 2) == 2);

    const PairLedger solo = build_ledger(make_matrix({{1}}));
    CHECK(solo.covered_pairs() == 0);
    CHECK(solo.total_witnesses() == 0);

    CHECK_THROWS_AS(build_ledger(make_matrix({{1, 1}}, 2)), std::invalid_argument);
}

TEST_CASE("ledger: every pair witnessed in the 2x3 example") {
    const auto m = make_matrix({{1, 2, 3}, {2, 3, 1}}, 3);
    const PairLedger led = build_ledger(m);
    // brute-force witness enumeration
    for (Color a = 1; a <= 3; ++a)
        for (Color b = a + 1; b <= 3; ++b) {
            int expected = 0;
            for (int i = 0; i < 2; ++i)
                for (int j1 = 0; j1 < 3; ++j1)
                    for (int j2 = j1 + 1; j2 < 3; ++j2) {
                        const Color x = m.at(i, j1), y = m.at(i, j2);
                        if ((x == a && y == b) || (x == b && y == a)) ++expected;
                    }
            for (int j = 0; j < 3; ++j) {
                const Color x = m.at(0, j), y = m.at(1, j);
                if ((x == a && y == b) || (x == b && y == a)) ++expected;
            }
            CHECK(led.count(a, b) == (uint32_t)expected);
            CHECK(led.count(a, b) >= 1);
        }
}

TEST_CASE("ledger axis decomposability under transpose") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_total_proper(3, 4, 7, rng);
        const PairLedger a = build_ledger(m);
        const PairLedger b = build_ledger(transpose(m));
        for (Color x = 1; x <= 7; ++x)
            for (Color y = x + 1; y <= 7; ++y) {
                CHECK(a.row_count(x, y) == b.col_count(x, y));
                CHECK(a.col_count(x, y) == b.row_count(x, y));
            }
    }
}

TEST_CASE("per-line witness contribution matches C(L,2)") {
    std::mt19937_64 rng(11);
    const auto m = random_total_proper(4, 5, 12, rng);
    const PairLedger led = build_ledger(m);
    const uint64_t expected = 4ULL * (5 * 4 / 2) + 5ULL * (4 * 3 / 2);
    CHECK(led.total_witnesses() == expected);
}

TEST_CASE("is_complete and family membership") {
    CHECK(is_complete(make_matrix({{1, 2}, {2, 1}}, 2)));
    CHECK_FALSE(is_complete(make_matrix({{1, 2}, {2, 1}}, 3)));  // colour 3 unused
    // {2,3} shares no line here
    CHECK_FALSE(is_complete(make_matrix({{1, 2}, {3, 1}}, 3)));

    CHECK(in_family(make_matrix({{1, 2}, {2, 1}}, 2), 2, 2, 2));
    CHECK_FALSE(in_family(make_matrix({{1, 2}, {2, 1}}, 2), 2, 2, 3));
    CHECK(check_family(make_matrix({{1, 2}, {2, 1}}, 3), 2, 2, 2) ==
          FamilyCheck::DimensionMismatch);
    CHECK(check_family(make_matrix({{1, 2}, {3, 1}}, 3), 2, 2, 3) ==
          FamilyCheck::NotComplete);
    ColorMatrix holes(2, 2, 2);
    holes.at(0, 0) = 1;
    CHECK(check_family(holes, 2, 2, 2) == FamilyCheck::NotTotal);
}

TEST_CASE("in_family transposes") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto m = random_total_proper(2, 3, 4, rng);
        CHECK(in_family(m, 2, 3, 4) == in_family(transpose(m), 3, 2, 4));
    }
}

TEST_CASE("frequency profiles") {
    const auto prof = frequency_profile(make_matrix({{1, 2}, {2, 1}}, 2));
    CHECK(prof.c(2) == 2);
    CHECK(prof.c(1) == 0);
    CHECK(prof.colors_used() == 2);

    const auto row = frequency_profile(make_matrix({{1, 2, 3}}, 3));
    CHECK(row.c(1) == 3);
    CHECK(row.max_freq() == 1);

    std::mt19937_64 rng(23);
    const auto m = random_total_proper(4, 6, 9, rng);
    const auto pf = frequency_profile(m);
    long long cells = 0;
    for (int l = 1; l <= pf.max_freq(); ++l) cells += (long long)l * pf.c(l);
    CHECK(cells == 24);  // cell conservation

    ColorMatrix holes(2, 2, 2);
    CHECK_THROWS_AS(frequency_profile(holes), std::invalid_argument);
}

TEST_CASE("row and column stats") {
    CHECK(row_stats(make_matrix({{1, 2}, {2, 1}}, 2), 0, 1) == 2);
    // each colour of the 2x3 cycle appears once per row: all three shared
    CHECK(row_stats(make_matrix({{1, 2, 3}, {2, 3, 1}}, 3), 0, 1) == 3);
    // disjoint rows share nothing
    CHECK(row_stats(make_matrix({{1, 2}, {3, 4}}, 4), 0, 1) == 0);
    CHECK(col_stats(make_matrix({{1, 2}, {2, 1}}, 2), 0, 1) == 2);
    CHECK_THROWS_AS(row_stats(make_matrix({{1, 2}, {2, 1}}, 2), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("type signatures") {
    // empty set has the empty type
    const auto m0 = make_matrix({{1, 2}, {2, 1}}, 2);
    const TypeSignature empty = type_of(m0, {});
    CHECK(empty.row_part.empty());
    CHECK(empty.col_part.empty());

    // alpha at (1,1),(3,2); beta at (2,1),(4,2) -> (1^4, 2^2)
    const auto m1 = make_matrix({{1, 3, 4, 5, 6},
                                 {2, 4, 3, 6, 5},
                                 {3, 1, 5, 7, 8},
                                 {4, 2, 6, 8, 7}},
                                8);
    REQUIRE(is_proper(m1));
    const std::vector<Color> d1{1, 2};
    const TypeSignature t1 = type_of(m1, d1);
    CHECK(t1 == TypeSignature{{1, 1, 1, 1}, {2, 2}});
    CHECK(to_string(t1) == "(1^4, 2^2)");

    // alpha at (1,1),(2,2); beta at (2,1),(3,2) -> (2^1 1^2, 2^2)
    const auto m2 = make_matrix({{1, 3, 4, 5, 6},
                                 {2, 1, 3, 6, 5},
                                 {3, 2, 5, 7, 8},
                                 {4, 5, 6, 8, 7}},
                                8);
    REQUIRE(is_proper(m2));
    const std::vector<Color> d2{1, 2};
    CHECK(type_of(m2, d2) == TypeSignature{{2, 1, 1}, {2, 2}});

    // sum of each part is 2|D|
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_total_proper(4, 5, 11, rng);
        const auto two = colors_with_frequency(m, 2);
        if (two.size() < 2) continue;
        const std::vector<Color> d{two[0], two[1]};
        const TypeSignature t = type_of(m, d);
        int rsum = 0, csum = 0;
        for (int v : t.row_part) rsum += v;
        for (int v : t.col_part) csum += v;
        CHECK(rsum == 4);
        CHECK(csum == 4);
    }

    // rejects non-2-colours
    const std::vector<Color> bad{3};
    CHECK_THROWS_AS(type_of(m0, bad), std::invalid_argument);
}

TEST_CASE("goodness degree helper") {
    const auto m = make_matrix({{1, 2}, {3, 1}}, 3);
    const PairLedger led = build_ledger(m);
    const std::vector<Color> others{2, 3};
    // colour 1 pairs with both 2 (row) and 3 (column)
    CHECK(led.good_with(1, others) == 2);
    const std::vector<Color> just3{3};
    CHECK(led.good_with(2, just3) == 0);  // {2,3} shares no line
}

TEST_CASE("matrix text format round trip") {
    const std::string text = "# witness\n2 2 2\n1 2\n2 1\n";
    const ParseOutcome parsed = parse_matrix(text);
    REQUIRE(parsed.matrix);
    CHECK(parsed.matrix->at(0, 0) == 1);
    CHECK(format_matrix(*parsed.matrix) == "2 2 2\n1 2\n2 1\n");

    // '*' marks unassigned
    const ParseOutcome holes = parse_matrix("1 3 3\n1 * 3\n");
    REQUIRE(holes.matrix);
    CHECK(holes.matrix->at(0, 1) == kUnassigned);
    CHECK_FALSE(holes.matrix->total());
    CHECK(format_matrix(*holes.matrix) == "1 3 3\n1 * 3\n");

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_total_proper(3, 4, 8, rng);
        if (trial % 3 == 0) m.at(rng() % 3, rng() % 4) = kUnassigned;
        const std::string out = format_matrix(m);
        const ParseOutcome back = parse_matrix(out);
        REQUIRE(back.matrix);
        CHECK(*back.matrix == m);
        CHECK(format_matrix(*back.matrix) == out);  // byte-exact round trip
    }
}

TEST_CASE("parse errors carry line and column") {
    const ParseOutcome bad1 = parse_matrix("2 2\n1 2\n2 1\n");
    CHECK_FALSE(bad1.matrix);
    CHECK(bad1.line == 1);

    const ParseOutcome bad2 = parse_matrix("2 2 2\n1 5\n2 1\n");
    CHECK_FALSE(bad2.matrix);
    CHECK(bad2.line == 2);
    CHECK(bad2.column == 2);

    const ParseOutcome bad3 = parse_matrix("2 2 2\n1 2\n");
    CHECK_FALSE(bad3.matrix);

    const ParseOutcome bad4 = parse_matrix("2 2 2\n1 2 1\n2 1\n");
    CHECK_FALSE(bad4.matrix);
    CHECK(bad4.line == 2);
}
