#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "wpolar/enumerate.hpp"
#include "wpolar/extremal.hpp"

using namespace wpolar;

TEST_CASE("maximum for fixed branching count") {
    auto r = max_wp_given_b(12, 1);
    REQUIRE(r);
    CHECK(r->value == 15);
    CHECK(r->regime == "b-max-1");
    CHECK(r->family == Family::BT2);

    r = max_wp_given_b(12, 3);
    REQUIRE(r);
    CHECK(r->value == 21);
    CHECK(r->regime == "b-max-2");

    // 7b >= 3n-4 regime; first reachable inside the stated range at n = 20
    r = max_wp_given_b(20, 8);
    REQUIRE(r);
    CHECK(r->value == 9 * 20 - 14 * 8 - 23);
    CHECK(r->regime == "b-max-3");
    CHECK(r->family == Family::BT1);

    CHECK_FALSE(max_wp_given_b(6, 1));       // below the covered orders
    CHECK_FALSE(max_wp_given_b(12, 5));      // outside 2b <= n-4
    CHECK_FALSE(max_wp_given_b(11, 4));      // odd-order edge of the stated range
}

TEST_CASE("third maximum regime agrees with brute force at its first cell") {
    long long max_wp = -1;
    enumerate_chemical_trees(EnumerationQuery{20, 8, {}, {}},
                             [&](const Tree& t) { max_wp = std::max(max_wp, wp_edge(t)); });
    auto r = max_wp_given_b(20, 8);
    REQUIRE(r);
    CHECK(r->regime == "b-max-3");
    CHECK(max_wp == r->value);
    auto w = construct_family(Family::BT1, 20, 8);
    REQUIRE(w);
    CHECK(wp_edge(*w) == r->value);
}

TEST_CASE("minimum for fixed branching count") {
    auto r = min_wp_given_b(10, 3);
    REQUIRE(r);
    CHECK(r->value == 8);
    CHECK(r->regime == "b-min-rich");

    r = min_wp_given_b(10, 4);
    REQUIRE(r);
    CHECK(r->value == 12);
    CHECK(r->regime == "b-min-scarce");

    r = min_wp_given_b(7, 1);
    REQUIRE(r);
    CHECK(r->value == 3);

    CHECK_FALSE(min_wp_given_b(10, 5));  // 2b > n-2
}

TEST_CASE("maximum for fixed segment count") {
    auto r = max_wp_given_k(10, 4);
    REQUIRE(r);
    CHECK(r->value == 13);
    CHECK(r->family == Family::CT1);

    r = max_wp_given_k(11, 6);
    REQUIRE(r);
    CHECK(r->value == 17);
    CHECK(r->regime == "k0-tight");
    CHECK(r->family == Family::CT2);

    // k = 5 has its own regimes; brute force gives 14 at n = 12
    r = max_wp_given_k(12, 5);
    REQUIRE(r);
    CHECK(r->value == 14);
    CHECK(r->regime == "k2-five-large");
    CHECK(r->family == Family::CT3);

    r = max_wp_given_k(9, 5);
    REQUIRE(r);
    CHECK(r->value == 2 * 9 - 2 * 5 + 2);
    CHECK(r->regime == "k2-five-small");

    CHECK_FALSE(max_wp_given_k(10, 3));   // no degree-4 core: no covered regime
    CHECK_FALSE(max_wp_given_k(10, 2));   // unrealizable segment count
    CHECK_FALSE(max_wp_given_k(10, 10));  // k > n-1
    CHECK_FALSE(max_wp_given_k(5, 4));    // below the covered orders
}

TEST_CASE("regimes partition the stated parameter ranges") {
    for (int n = 7; n <= 30; ++n) {
        for (int b = 1; 2 * b <= n - 4; ++b) {
            auto r = max_wp_given_b(n, b);
            REQUIRE(r);
            int hits = 0;
            if (5 * b <= n - 4) ++hits;
            if (5 * b > n - 4 && 7 * b < 3 * n - 4) ++hits;
            if (7 * b >= 3 * n - 4) ++hits;
            CHECK(hits == 1);
        }
        for (int b = 1; 2 * b <= n - 2; ++b) REQUIRE(min_wp_given_b(n, b));
        for (int k = 4; k <= n - 1; ++k) REQUIRE(max_wp_given_k(n, k));
    }
}

TEST_CASE("formula values are continuous at shared regime boundaries") {
    for (int n = 7; n <= 40; ++n) {
        if ((n - 4) % 5 == 0) {
            int b = (n - 4) / 5;
            if (b >= 1) CHECK(n + 10 * b - 7 == 3 * n - 15);
        }
        if ((3 * n - 4) % 7 == 0) {
            int b = (3 * n - 4) / 7;
            if (b >= 1 && 2 * b <= n - 4) CHECK(9 * n - 14 * b - 23 == 3 * n - 15);
        }
    }
}

TEST_CASE("family representatives match the stated examples") {
    auto bt2 = construct_family(Family::BT2, 12, 1);
    REQUIRE(bt2);
    CHECK(degree_census(*bt2) == DegreeCensus{4, 7, 0, 1});
    CHECK(wp_edge(*bt2) == 15);
    auto pc = predicted_census(Family::BT2, 12, 1);
    REQUIRE(pc);
    CHECK(pc->edges.get(4, 4) == 0);
    CHECK(pc->edges.get(2, 4) == 4);
    CHECK(pc->edges.get(2, 2) == 3);
    CHECK(pc->edges.get(1, 2) == 4);
    CHECK(pc->theta == 4);

    auto bnb = construct_family(Family::Bnb, 10, 3);
    REQUIRE(bnb);
    CHECK(degree_census(*bnb) == DegreeCensus{5, 2, 3, 0});
    CHECK(measured_edge_census(*bnb).get(2, 3) == 4);
    CHECK(wp_edge(*bnb) == 8);

    auto ct1 = construct_family(Family::CT1, 10, 4);
    REQUIRE(ct1);
    CHECK(degree_census(*ct1) == DegreeCensus{4, 5, 0, 1});
    CHECK(measured_edge_census(*ct1).get(2, 4) == 4);
    CHECK(measured_edge_census(*ct1).get(2, 2) == 1);
    CHECK(wp_edge(*ct1) == 13);

    // ct2 in its rich regime: 3n = 5k + 9
    auto pc2 = predicted_census(Family::CT2, 18, 9);
    REQUIRE(pc2);
    CHECK(pc2->regime == "k0-rich");
    CHECK(pc2->edges.get(2, 2) == 1);
    CHECK(pc2->edges.get(2, 3) == 2);
    CHECK(pc2->edges.get(2, 4) == 5);
    CHECK(pc2->edges.get(3, 4) == 1);
    CHECK(pc2->edges.get(4, 4) == 1);
    CHECK(pc2->theta == 5);

    // ct3 with no degree-4 core
    auto pc3 = predicted_census(Family::CT3, 9, 5);
    REQUIRE(pc3);
    CHECK(pc3->edges.get(1, 2) == 3);
    CHECK(pc3->edges.get(2, 3) == 3);
    CHECK(pc3->edges.get(1, 3) == 1);
    CHECK(pc3->edges.get(3, 3) == 1);
    CHECK(pc3->wp == 2 * 9 - 2 * 5 + 2);
    auto pc3b = predicted_census(Family::CT3, 10, 5);
    REQUIRE(pc3b);
    CHECK(pc3b->edges.get(2, 3) == 4);
    CHECK(pc3b->edges.get(2, 2) == 0);
    CHECK(pc3b->wp == 10 - 5 + 7);
}

TEST_CASE("unrealizable placements are rejected") {
    CHECK_FALSE(construct_family(Family::Bnb, 10, 1));  // degree-2 vertices forced next to pendents
    CHECK(construct_family(Family::Bnb, 4, 1));         // the star needs no degree-2 vertex
    CHECK_FALSE(construct_family(Family::BT2, 11, 3));  // 3b >= n-2
    CHECK_FALSE(construct_family(Family::BT1, 12, 2));  // 3b < n-2
    CHECK_FALSE(construct_family(Family::CT1, 12, 6));  // k mod 3 mismatch
    CHECK_FALSE(construct_family(Family::CT2, 12, 3));  // core would be empty
    CHECK_FALSE(construct_family(Family::CT3, 8, 8));   // k > n-1
}

TEST_CASE("wp from census") {
    EdgeTypeCensus only_pendent;
    only_pendent.at(1, 2) = 3;
    only_pendent.at(1, 4) = 2;
    CHECK(wp_from_census(only_pendent) == 0);

    EdgeTypeCensus bt2_12_1;
    bt2_12_1.at(2, 4) = 4;
    bt2_12_1.at(2, 2) = 3;
    bt2_12_1.at(1, 2) = 4;
    CHECK(wp_from_census(bt2_12_1) == 15);

    EdgeTypeCensus x23only;
    x23only.at(2, 3) = 4;
    x23only.at(1, 3) = 5;
    CHECK(wp_from_census(x23only) == 8);
}

TEST_CASE("constructed censuses equal predictions across the sweep") {
    for (int n = 4; n <= 20; ++n) {
        for (int b = 1; b <= n; ++b)
            for (Family f : {Family::BT1, Family::BT2, Family::Bnb}) {
                auto pc = predicted_census(f, n, b);
                auto t = construct_family(f, n, b);
                REQUIRE(pc.has_value() == t.has_value());
                if (!pc) continue;
                CHECK(degree_census(*t) == pc->degrees);
                CHECK(measured_edge_census(*t) == pc->edges);
                CHECK(wp_edge(*t) == pc->wp);
                CHECK(wp_from_census(pc->edges) == pc->wp);
                CHECK(census_consistent(pc->edges, pc->degrees, n));
                CHECK(branching_count(*t) == b);
            }
        for (int k = 3; k <= n - 1; ++k)
            for (Family f : {Family::CT1, Family::CT2, Family::CT3}) {
                auto pc = predicted_census(f, n, k);
                auto t = construct_family(f, n, k);
                REQUIRE(pc.has_value() == t.has_value());
                if (!pc) continue;
                CHECK(degree_census(*t) == pc->degrees);
                CHECK(measured_edge_census(*t) == pc->edges);
                CHECK(wp_edge(*t) == pc->wp);
                CHECK(wp_from_census(pc->edges) == pc->wp);
                CHECK(census_consistent(pc->edges, pc->degrees, n));
                CHECK(segment_count(*t) == k);
            }
    }
}

TEST_CASE("formula ops agree with the census-level value in their regimes") {
    for (int n = 7; n <= 20; ++n) {
        for (int b = 1; 2 * b <= n - 4; ++b) {
            auto r = max_wp_given_b(n, b);
            REQUIRE(r);
            auto pc = predicted_census(r->family, n, b);
            REQUIRE(pc);
            CHECK(pc->wp == r->value);
        }
        for (int b = 2; 2 * b <= n - 2; ++b) {
            auto r = min_wp_given_b(n, b);
            REQUIRE(r);
            auto pc = predicted_census(Family::Bnb, n, b);
            REQUIRE(pc);
            CHECK(pc->wp == r->value);
        }
        for (int k = 4; k <= n - 1; ++k) {
            auto r = max_wp_given_k(n, k);
            REQUIRE(r);
            auto pc = predicted_census(r->family, n, k);
            REQUIRE(pc);
            CHECK(pc->wp == r->value);
        }
    }
}
