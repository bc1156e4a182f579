#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracle.hpp"
#include "wpolar/canonical.hpp"
#include "wpolar/enumerate.hpp"
#include "wpolar/tree.hpp"

using namespace wpolar;

TEST_CASE("tree construction validates") {
    CHECK_NOTHROW(make_tree(1, {}));
    CHECK_NOTHROW(make_tree(2, {{0, 1}}));
    CHECK_THROWS_AS(make_tree(3, {{0, 1}}), std::invalid_argument);            // too few edges
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);    // duplicate
    CHECK_THROWS_AS(make_tree(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 5}}), std::invalid_argument);    // out of range
}

TEST_CASE("degree census") {
    DegreeCensus p7 = degree_census(oracle::path(7));
    CHECK(p7 == DegreeCensus{2, 5, 0, 0});
    DegreeCensus k14 = degree_census(oracle::star(4));
    CHECK(k14 == DegreeCensus{4, 0, 0, 1});
    DegreeCensus mb = degree_census(oracle::methylbutane());
    CHECK(mb == DegreeCensus{3, 1, 1, 0});
}

TEST_CASE("degree census handshake for all enumerated trees") {
    for (int n = 2; n <= 10; ++n) {
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            DegreeCensus c = degree_census(t);
            CHECK(c.total() == n);
            CHECK(c.n1 + 2 * c.n2 + 3 * c.n3 + 4 * c.n4 == 2 * (n - 1));
            CHECK(c.n1 == c.n3 + 2 * c.n4 + 2);
        });
    }
}

TEST_CASE("wiener polarity by both definitions") {
    CHECK(wp_edge(oracle::path(7)) == 4);
    CHECK(wp_distance(oracle::path(7)) == 4);
    CHECK(wp_edge(oracle::star(4)) == 0);
    CHECK(wp_distance(oracle::star(4)) == 0);
    CHECK(wp_edge(oracle::methylbutane()) == 2);
    CHECK(wp_distance(oracle::methylbutane()) == 2);
    // trivially zero below order 4
    for (int n = 1; n <= 3; ++n) {
        CHECK(wp_edge(oracle::path(n)) == 0);
        CHECK(wp_distance(oracle::path(n)) == 0);
    }
}

TEST_CASE("both definitions agree on every enumerated tree") {
    for (int n = 4; n <= 10; ++n)
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            CHECK(wp_edge(t) == wp_distance(t));
        });
}

TEST_CASE("branching count") {
    CHECK(branching_count(oracle::path(7)) == 0);
    CHECK(branching_count(oracle::star(4)) == 1);
}

TEST_CASE("segments") {
    auto segs = segments(oracle::path(7));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].length() == 6);

    segs = segments(oracle::star(4));
    REQUIRE(segs.size() == 4);
    for (const auto& s : segs) CHECK(s.length() == 1);

    CHECK(segments(oracle::methylbutane()).size() == 3);
    CHECK_THROWS_AS(segments(make_tree(1, {})), std::invalid_argument);
}

TEST_CASE("segment count identity and edge partition") {
    for (int n = 2; n <= 14; ++n) {
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            auto segs = segments(t);
            DegreeCensus c = degree_census(t);
            CHECK(static_cast<int>(segs.size()) == c.n1 + c.n3 + c.n4 - 1);
            if (branching_count(t) > 0)
                CHECK(static_cast<int>(segs.size()) == 2 * c.n3 + 3 * c.n4 + 1);
            // segment edges partition E(t)
            std::set<std::pair<int, int>> covered;
            for (const auto& s : segs)
                for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
                    int a = s.vertices[i], b = s.vertices[i + 1];
                    if (a > b) std::swap(a, b);
                    CHECK(covered.insert({a, b}).second);  // disjoint
                }
            CHECK(static_cast<int>(covered.size()) == n - 1);  // exhaustive
        });
    }
}

TEST_CASE("path classification") {
    auto star = classify_paths(oracle::star(4));
    REQUIRE(star.size() == 4);
    for (const auto& p : star) {
        CHECK(p.kind == PathKind::Pendent);
        CHECK(p.length == 1);
    }

    auto mb = classify_paths(oracle::methylbutane());
    int pend = 0, internal = 0;
    for (const auto& p : mb) (p.kind == PathKind::Pendent ? pend : internal)++;
    CHECK(pend == 3);
    CHECK(internal == 0);

    auto db = classify_paths(oracle::double_broom());
    pend = internal = 0;
    int internal_len = 0;
    for (const auto& p : db) {
        if (p.kind == PathKind::Pendent) {
            ++pend;
            CHECK(p.length == 1);
        } else {
            ++internal;
            internal_len = p.length;
        }
    }
    CHECK(pend == 4);
    CHECK(internal == 1);
    CHECK(internal_len == 2);

    CHECK_THROWS_AS(classify_paths(oracle::path(7)), std::invalid_argument);
}

TEST_CASE("canonical form separates and identifies") {
    Tree p4 = oracle::path(4);
    Tree p4_relab = make_tree(4, {{0, 2}, {1, 2}, {1, 3}});  // 0-2-1-3 path
    CHECK(canonical_form(p4) == canonical_form(p4_relab));
    CHECK(canonical_form(p4) != canonical_form(oracle::star(3)));

    std::unordered_set<Code, CodeHash> codes;
    enumerate_chemical_trees(EnumerationQuery{7, {}, {}, {}},
                             [&](const Tree& t) { codes.insert(canonical_form(t)); });
    CHECK(codes.size() == 9);
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(20240811);
    for (int n = 4; n <= 9; ++n) {
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            Code base = canonical_form(t);
            std::vector<int> perm(t.n);
            for (int i = 0; i < t.n; ++i) perm[i] = i;
            for (int round = 0; round < 3; ++round) {
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::pair<int, int>> edges;
                for (auto [u, v] : t.edges())
                    edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
                CHECK(canonical_form(make_tree(t.n, edges)) == base);
            }
        });
    }
}
