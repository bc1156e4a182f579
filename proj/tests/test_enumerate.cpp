#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "oracle.hpp"
#include "wpolar/enumerate.hpp"

using namespace wpolar;

TEST_CASE("query validation") {
    EnumerationQuery bad;
    bad.n = 5;
    bad.b = 1;
    bad.k = 3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.n = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("unfiltered counts match the known series") {
    const long long expected[] = {1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355};
    for (int n = 1; n <= 12; ++n)
        CHECK(count_chemical_trees(EnumerationQuery{n, {}, {}, {}}) == expected[n - 1]);
}

TEST_CASE("counts agree with the naive labeled-tree oracle") {
    for (int n = 1; n <= 8; ++n)
        CHECK(count_chemical_trees(EnumerationQuery{n, {}, {}, {}}) ==
              oracle::prufer_chemical_count(n));
}

TEST_CASE("no duplicate isomorphism classes") {
    for (int n = 4; n <= 12; ++n) {
        std::unordered_set<Code, CodeHash> codes;
        long long total = 0;
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            ++total;
            CHECK(codes.insert(canonical_form(t)).second);
        });
        CHECK(total == static_cast<long long>(codes.size()));
    }
}

TEST_CASE("filters are sound and exhaustive") {
    CHECK(count_chemical_trees(EnumerationQuery{5, 1, {}, {}}) == 2);
    for (int n = 4; n <= 12; ++n) {
        long long all = count_chemical_trees(EnumerationQuery{n, {}, {}, {}});
        long long by_b = 0, by_k = 0;
        for (int b = 0; b <= n; ++b) {
            enumerate_chemical_trees(EnumerationQuery{n, b, {}, {}}, [&](const Tree& t) {
                ++by_b;
                CHECK(branching_count(t) == b);
            });
        }
        for (int k = 1; k <= n; ++k) {
            enumerate_chemical_trees(EnumerationQuery{n, {}, k, {}}, [&](const Tree& t) {
                ++by_k;
                CHECK(segment_count(t) == k);
            });
        }
        CHECK(by_b == all);
        CHECK(by_k == all);
    }
}

TEST_CASE("deterministic stream and cap") {
    auto a = collect_chemical_trees(EnumerationQuery{9, {}, {}, {}});
    auto b = collect_chemical_trees(EnumerationQuery{9, {}, {}, {}});
    CHECK(a == b);
    auto capped = collect_chemical_trees(EnumerationQuery{9, {}, {}, 10});
    REQUIRE(capped.size() == 10);
    for (std::size_t i = 0; i < capped.size(); ++i) CHECK(capped[i] == a[i]);
}

TEST_CASE("realizable values") {
    CHECK(realizable_values(7, Constraint::Branching) == std::set<int>{0, 1, 2});
    CHECK(realizable_values(4, Constraint::Segments) == std::set<int>{1, 3});
    CHECK(realizable_values(2, Constraint::Segments) == std::set<int>{1});
}

TEST_CASE("extremal table") {
    auto tb = extremal_table(12, 12, Constraint::Branching);
    REQUIRE(tb.cells.count({12, 1}) == 1);
    CHECK(tb.cells[{12, 1}].max_wp == 15);

    auto tb2 = extremal_table(10, 10, Constraint::Branching);
    REQUIRE(tb2.cells.count({10, 3}) == 1);
    CHECK(tb2.cells[{10, 3}].min_wp == 8);

    auto tk = extremal_table(10, 10, Constraint::Segments);
    REQUIRE(tk.cells.count({10, 4}) == 1);
    CHECK(tk.cells[{10, 4}].max_wp == 13);
}

TEST_CASE("extremal table invariants") {
    auto tb = extremal_table(4, 10, Constraint::Segments);
    for (const auto& [key, cell] : tb.cells) {
        CHECK(cell.min_wp <= cell.max_wp);
        CHECK(cell.class_size >= 1);
    }
}
