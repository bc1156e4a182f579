#pragma once

#include <optional>

#include "census.hpp"
#include "tree.hpp"

namespace wpolar {

enum class Family { BT1, BT2, Bnb, CT1, CT2, CT3 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::BT1: return "bt1";
        case Family::BT2: return "bt2";
        case Family::Bnb: return "bnb";
        case Family::CT1: return "ct1";
        case Family::CT2: return "ct2";
        case Family::CT3: return "ct3";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    if (s == "bt1") return Family::BT1;
    if (s == "bt2") return Family::BT2;
    if (s == "bnb") return Family::Bnb;
    if (s == "ct1") return Family::CT1;
    if (s == "ct2") return Family::CT2;
    if (s == "ct3") return Family::CT3;
    return std::nullopt;
}

struct BoundResult {
    long long value = 0;
    bool upper = true;
    std::string regime;
    Family family = Family::BT1;
};

// Sharp maximum of the Wiener polarity index over n-vertex chemical trees with
// exactly b branching vertices. Regime boundaries are exact integer
// comparisons; outside the covered (n, b) range the formula is inapplicable.
inline std::optional<BoundResult> max_wp_given_b(int n, int b) {
    if (n < 7 || b < 1 || 2 * b > n - 4) return std::nullopt;
    Family fam = (3 * b < n - 2) ? Family::BT2 : Family::BT1;
    if (5 * b <= n - 4) return BoundResult{n + 10LL * b - 7, true, "b-max-1", Family::BT2};
    if (7 * b < 3 * n - 4) return BoundResult{3LL * n - 15, true, "b-max-2", fam};
    return BoundResult{9LL * n - 14LL * b - 23, true, "b-max-3", Family::BT1};
}

// Sharp minimum over the same class.
inline std::optional<BoundResult> min_wp_given_b(int n, int b) {
    if (n < 7 || b < 1 || 2 * b > n - 2) return std::nullopt;
    if (n >= 3 * b + 1) return BoundResult{static_cast<long long>(b) + n - 5, false, "b-min-rich", Family::Bnb};
    return BoundResult{4LL * b - 4, false, "b-min-scarce", Family::Bnb};
}

// Sharp maximum over n-vertex chemical trees with exactly k segments, split by
// k mod 3. k = 5 carries its own two regimes (the degree-4 core is empty
// there); k = 3 has no applicable regime (single branching vertex, no core).
inline std::optional<BoundResult> max_wp_given_k(int n, int k) {
    if (n < 6 || k < 3 || k > n - 1) return std::nullopt;
    switch (k % 3) {
        case 1: {  // k >= 4
            if (k < 4) return std::nullopt;
            if (3 * n < 5 * k + 7) return BoundResult{3LL * n - 15, true, "k1-scarce", Family::CT1};
            return BoundResult{(3LL * n + 10LL * k - 31) / 3, true, "k1-rich", Family::CT1};
        }
        case 0: {  // k >= 6
            if (k < 6) return std::nullopt;
            if (3 * n <= 5 * k) return BoundResult{3LL * n - 15, true, "k0-scarce", Family::CT2};
            if (3 * n == 5 * k + 3) return BoundResult{3LL * n - 16, true, "k0-tight", Family::CT2};
            return BoundResult{(3LL * n + 10LL * k - 39) / 3, true, "k0-rich", Family::CT2};
        }
        default: {  // k % 3 == 2, k >= 5
            if (k == 5) {
                if (n < k + 5) return BoundResult{2LL * n - 2 * k + 2, true, "k2-five-small", Family::CT3};
                return BoundResult{static_cast<long long>(n) - k + 7, true, "k2-five-large", Family::CT3};
            }
            if (3 * n <= 5 * k - 7) return BoundResult{3LL * n - 15, true, "k2-scarce", Family::CT3};
            if (3 * n <= 5 * k + 2) return BoundResult{(6LL * n + 5LL * k - 52) / 3, true, "k2-mid", Family::CT3};
            return BoundResult{(3LL * n + 10LL * k - 47) / 3, true, "k2-rich", Family::CT3};
        }
    }
}

namespace detail {

struct TreeBuilder {
    std::vector<std::pair<int, int>> edges;
    int count = 0;

    int add_root() { return count++; }
    int add_child(int parent) {
        edges.emplace_back(parent, count);
        return count++;
    }
    Tree build() const { return make_tree(count, edges); }
};

// Chain of `twos` degree-2 vertices below `parent`, terminated by a pendent.
inline void attach_chain(TreeBuilder& b, int parent, int twos) {
    int cur = parent;
    for (int i = 0; i < twos; ++i) cur = b.add_child(cur);
    b.add_child(cur);
}

// Path of `m` core vertices; free valences per vertex assuming final degree 4.
inline std::vector<int> build_core_path(TreeBuilder& b, int m, std::vector<int>& slots_owner) {
    std::vector<int> core;
    core.push_back(b.add_root());
    for (int i = 1; i < m; ++i) core.push_back(b.add_child(core.back()));
    for (int i = 0; i < m; ++i) {
        int used = (m == 1) ? 0 : (i == 0 || i == m - 1) ? 1 : 2;
        for (int s = 0; s < 4 - used; ++s) slots_owner.push_back(core[i]);
    }
    return core;
}

// Round-robin split of `total` items into `parts` chains, each at least one.
inline std::vector<int> spread(int total, int parts) {
    std::vector<int> lens(parts, total / parts);
    for (int i = 0; i < total % parts; ++i) ++lens[i];
    return lens;
}

}  // namespace detail

// One deterministic representative of the named extremal family
// (breadth-first attachment, lowest labels first). Empty when the degree
// sequence is unrealizable under the family's placement rules.
inline std::optional<Tree> construct_family(Family f, int n, int param) {
    using detail::TreeBuilder;
    using detail::attach_chain;
    using detail::build_core_path;
    using detail::spread;

    switch (f) {
        case Family::BT2: {
            int b = param;
            if (b < 1 || 3 * b >= n - 2) return std::nullopt;
            int n2 = n - 3 * b - 2, theta = 2 * b + 2;
            TreeBuilder tb;
            std::vector<int> slots;
            build_core_path(tb, b, slots);
            if (n2 >= theta) {
                std::vector<int> lens = spread(n2, theta);
                for (int i = 0; i < theta; ++i) attach_chain(tb, slots[i], lens[i]);
            } else {
                for (int i = 0; i < theta; ++i) attach_chain(tb, slots[i], i < n2 ? 1 : 0);
            }
            return tb.build();
        }
        case Family::BT1: {
            int b = param;
            if (b < 1 || 3 * b < n - 2 || 2 * b > n - 3) return std::nullopt;
            int n4 = n - 2 * b - 2, n3 = 3 * b - n + 2, theta = 2 * n4 + 2;
            TreeBuilder tb;
            std::vector<int> slots;
            build_core_path(tb, n4, slots);
            std::vector<int> threes;
            int placed = std::min(n3, theta);
            for (int i = 0; i < placed; ++i) threes.push_back(tb.add_child(slots[i]));
            for (int i = placed; i < theta; ++i) tb.add_child(slots[i]);  // bare pendents
            std::vector<int> kid_count(placed + std::max(0, n3 - placed), 0);
            // extra degree-3 vertices attach below earlier ones, two per host
            std::size_t host = 0;
            for (int e = 0; e < n3 - placed; ++e) {
                while (host < threes.size() && kid_count[host] == 2) ++host;
                if (host >= threes.size()) return std::nullopt;
                threes.push_back(tb.add_child(threes[host]));
                ++kid_count[host];
            }
            for (std::size_t i = 0; i < threes.size(); ++i)
                for (int p = 0; p < 2 - kid_count[i]; ++p) tb.add_child(threes[i]);
            return tb.build();
        }
        case Family::Bnb: {
            int b = param;
            if (b < 1 || 2 * b > n - 2) return std::nullopt;
            int n2 = n - 2 * b - 2;
            // pendent vertices attach directly to degree-3 vertices and the
            // degree-2 vertices live on internal paths; impossible when b = 1
            if (b == 1 && n2 > 0) return std::nullopt;
            TreeBuilder tb;
            std::vector<int> spine;
            spine.push_back(tb.add_root());
            std::vector<int> link(std::max(b - 1, 0), 0);
            if (b > 1) {
                if (n2 <= b - 1) {
                    for (int i = 0; i < n2; ++i) link[i] = 1;
                } else {
                    link = spread(n2, b - 1);
                }
            }
            for (int i = 1; i < b; ++i) {
                int cur = spine.back();
                for (int j = 0; j < link[i - 1]; ++j) cur = tb.add_child(cur);
                spine.push_back(tb.add_child(cur));
            }
            for (int i = 0; i < b; ++i) {
                int pend = (b == 1) ? 3 : (i == 0 || i == b - 1) ? 2 : 1;
                for (int p = 0; p < pend; ++p) tb.add_child(spine[i]);
            }
            return tb.build();
        }
        case Family::CT1: {
            int k = param;
            if (k % 3 != 1 || k < 4 || n < k + 1) return std::nullopt;
            int n4 = (k - 1) / 3, n2 = n - k - 1, n1 = (2 * k + 4) / 3;
            TreeBuilder tb;
            std::vector<int> slots;
            build_core_path(tb, n4, slots);
            int theta = 2 * n4 + 2;  // == n1
            if (n2 >= n1) {
                std::vector<int> lens = spread(n2, theta);
                for (int i = 0; i < theta; ++i) attach_chain(tb, slots[i], lens[i]);
            } else {
                for (int i = 0; i < theta; ++i) attach_chain(tb, slots[i], i < n2 ? 1 : 0);
            }
            return tb.build();
        }
        case Family::CT2: {
            int k = param;
            if (k % 3 != 0 || k < 6 || n < k + 1) return std::nullopt;
            int n4 = (k - 3) / 3, n2 = n - k - 1, Theta = 2 * n4 + 1;
            TreeBuilder tb;
            std::vector<int> slots;
            build_core_path(tb, n4, slots);
            int three = tb.add_child(slots[0]);
            std::vector<int> rest(slots.begin() + 1, slots.end());  // Theta of them
            if (n2 <= Theta) {
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], i < n2 ? 1 : 0);
                attach_chain(tb, three, 0);
                attach_chain(tb, three, 0);
            } else if (n2 == Theta + 1) {
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], 1);
                attach_chain(tb, three, 1);
                attach_chain(tb, three, 0);
            } else {
                std::vector<int> lens = spread(n2, Theta + 2);
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], lens[i]);
                attach_chain(tb, three, lens[Theta]);
                attach_chain(tb, three, lens[Theta + 1]);
            }
            return tb.build();
        }
        case Family::CT3: {
            int k = param;
            if (k % 3 != 2 || k < 5 || n < k + 1) return std::nullopt;
            int n2 = n - k - 1;
            TreeBuilder tb;
            if (k == 5) {
                int a = tb.add_root();
                int b3 = tb.add_child(a);
                int chains[4] = {a, a, b3, b3};
                if (n2 <= 4) {
                    for (int i = 0; i < 4; ++i) attach_chain(tb, chains[i], i < n2 ? 1 : 0);
                } else {
                    std::vector<int> lens = spread(n2, 4);
                    for (int i = 0; i < 4; ++i) attach_chain(tb, chains[i], lens[i]);
                }
                return tb.build();
            }
            int n4 = (k - 5) / 3, Theta = 2 * n4;
            std::vector<int> slots;
            build_core_path(tb, n4, slots);
            int t1 = tb.add_child(slots[0]);
            int t2 = tb.add_child(slots[1]);
            std::vector<int> rest(slots.begin() + 2, slots.end());  // Theta of them
            int tslots[4] = {t1, t1, t2, t2};
            if (n2 <= Theta) {
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], i < n2 ? 1 : 0);
                for (int i = 0; i < 4; ++i) attach_chain(tb, tslots[i], 0);
            } else if (n2 <= Theta + 3) {
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], 1);
                for (int i = 0; i < 4; ++i) attach_chain(tb, tslots[i], i < n2 - Theta ? 1 : 0);
            } else {
                std::vector<int> lens = spread(n2, Theta + 4);
                for (int i = 0; i < Theta; ++i) attach_chain(tb, rest[i], lens[i]);
                for (int i = 0; i < 4; ++i) attach_chain(tb, tslots[i], lens[Theta + i]);
            }
            return tb.build();
        }
    }
    return std::nullopt;
}

// Predicted vertex and edge-type censuses for a family representative in its
// regime, with the closed-form value they imply.
struct RegimeCensus {
    std::string regime;
    DegreeCensus degrees;
    EdgeTypeCensus edges;
    int theta = 0;  // non-branching neighbors of degree-4 vertices
    long long wp = 0;
};

inline std::optional<RegimeCensus> predicted_census(Family f, int n, int param) {
    RegimeCensus rc;
    auto& x = rc.edges;
    switch (f) {
        case Family::BT2: {
            int b = param;
            if (b < 1 || 3 * b >= n - 2) return std::nullopt;
            int n2 = n - 3 * b - 2, theta = 2 * b + 2;
            rc.degrees = DegreeCensus{2 * b + 2, n2, 0, b};
            rc.theta = theta;
            x.at(4, 4) = b - 1;
            if (n2 >= theta) {
                rc.regime = "b-max-1";
                x.at(2, 4) = theta;
                x.at(2, 2) = n - 5 * b - 4;
                x.at(1, 2) = theta;
                rc.wp = n + 10LL * b - 7;
            } else {
                rc.regime = "b-max-2";
                x.at(2, 4) = n2;
                x.at(1, 2) = n2;
                x.at(1, 4) = theta - n2;
                rc.wp = 3LL * n - 15;
            }
            return rc;
        }
        case Family::BT1: {
            int b = param;
            if (b < 1 || 3 * b < n - 2 || 2 * b > n - 3) return std::nullopt;
            int n4 = n - 2 * b - 2, n3 = 3 * b - n + 2, theta = 2 * n4 + 2;
            rc.degrees = DegreeCensus{n - b, 0, n3, n4};
            rc.theta = theta;
            x.at(4, 4) = n4 - 1;
            if (n3 < theta) {
                rc.regime = "b-max-2";
                x.at(3, 4) = n3;
                x.at(1, 3) = 2 * n3;
                x.at(1, 4) = theta - n3;
                rc.wp = 3LL * n - 15;
            } else {
                rc.regime = "b-max-3";
                x.at(3, 4) = theta;
                x.at(3, 3) = n3 - theta;
                x.at(1, 3) = n - b;
                rc.wp = 9LL * n - 14LL * b - 23;
            }
            return rc;
        }
        case Family::Bnb: {
            int b = param;
            if (b < 1 || 2 * b > n - 2) return std::nullopt;
            int n2 = n - 2 * b - 2;
            if (b == 1 && n2 > 0) return std::nullopt;
            rc.degrees = DegreeCensus{b + 2, n2, b, 0};
            rc.theta = 0;
            x.at(1, 3) = b + 2;
            if (n2 >= b - 1) {
                rc.regime = "b-min-rich";
                x.at(2, 3) = 2 * (b - 1);
                x.at(2, 2) = n - 3 * b - 1;
                rc.wp = static_cast<long long>(b) + n - 5;
            } else {
                rc.regime = "b-min-scarce";
                x.at(2, 3) = 2 * n2;
                x.at(3, 3) = b - 1 - n2;
                rc.wp = 4LL * b - 4;
            }
            return rc;
        }
        case Family::CT1: {
            int k = param;
            if (k % 3 != 1 || k < 4 || n < k + 1) return std::nullopt;
            int n4 = (k - 1) / 3, n2 = n - k - 1, n1 = (2 * k + 4) / 3;
            rc.degrees = DegreeCensus{n1, n2, 0, n4};
            rc.theta = 2 * n4 + 2;
            x.at(4, 4) = (k - 4) / 3;
            if (n1 > n2) {
                rc.regime = "k1-scarce";
                x.at(1, 2) = n2;
                x.at(2, 4) = n2;
                x.at(1, 4) = n1 - n2;
                rc.wp = 3LL * n - 15;
            } else {
                rc.regime = "k1-rich";
                x.at(1, 2) = n1;
                x.at(2, 4) = n1;
                x.at(2, 2) = n2 - n1;
                rc.wp = (3LL * n + 10LL * k - 31) / 3;
            }
            return rc;
        }
        case Family::CT2: {
            int k = param;
            if (k % 3 != 0 || k < 6 || n < k + 1) return std::nullopt;
            int n4 = (k - 3) / 3, n2 = n - k - 1, n1 = (2 * k + 3) / 3, Theta = 2 * n4 + 1;
            rc.degrees = DegreeCensus{n1, n2, 1, n4};
            rc.theta = Theta;
            x.at(3, 4) = 1;
            x.at(4, 4) = (k - 6) / 3;
            if (n2 <= Theta) {
                rc.regime = "k0-scarce";
                x.at(2, 4) = n2;
                x.at(1, 2) = n2;
                x.at(1, 3) = 2;
                x.at(1, 4) = Theta - n2;
                rc.wp = 3LL * n - 15;
            } else if (n2 == Theta + 1) {
                rc.regime = "k0-tight";
                x.at(2, 3) = 1;
                x.at(2, 4) = n2 - 1;
                x.at(1, 2) = n2;
                x.at(1, 3) = 1;
                rc.wp = 3LL * n - 16;
            } else {
                rc.regime = "k0-rich";
                x.at(2, 3) = 2;
                x.at(2, 4) = Theta;
                x.at(2, 2) = (3 * n - 5 * k - 6) / 3;
                x.at(1, 2) = n1;
                rc.wp = (3LL * n + 10LL * k - 39) / 3;
            }
            return rc;
        }
        case Family::CT3: {
            int k = param;
            if (k % 3 != 2 || k < 5 || n < k + 1) return std::nullopt;
            int n2 = n - k - 1;
            if (k == 5) {
                rc.degrees = DegreeCensus{4, n2, 2, 0};
                rc.theta = 0;
                x.at(3, 3) = 1;
                if (n < k + 5) {
                    rc.regime = "k2-five-small";
                    x.at(1, 2) = n2;
                    x.at(2, 3) = n2;
                    x.at(1, 3) = 4 - n2;
                    rc.wp = 2LL * n - 2 * k + 2;
                } else {
                    rc.regime = "k2-five-large";
                    x.at(1, 2) = 4;
                    x.at(2, 3) = 4;
                    x.at(2, 2) = n2 - 4;
                    rc.wp = static_cast<long long>(n) - k + 7;
                }
                return rc;
            }
            int n4 = (k - 5) / 3, n1 = (2 * k + 2) / 3, Theta = 2 * n4;
            rc.degrees = DegreeCensus{n1, n2, 2, n4};
            rc.theta = Theta;
            x.at(3, 4) = 2;
            x.at(4, 4) = (k - 8) / 3;
            if (n2 <= Theta) {
                rc.regime = "k2-scarce";
                x.at(2, 4) = n2;
                x.at(1, 2) = n2;
                x.at(1, 3) = 4;
                x.at(1, 4) = Theta - n2;
                rc.wp = 3LL * n - 15;
            } else if (n2 <= Theta + 3) {
                rc.regime = "k2-mid";
                x.at(2, 4) = Theta;
                x.at(2, 3) = n2 - Theta;
                x.at(1, 3) = 4 - (n2 - Theta);
                x.at(1, 2) = n2;
                rc.wp = (6LL * n + 5LL * k - 52) / 3;
            } else {
                rc.regime = "k2-rich";
                x.at(2, 4) = Theta;
                x.at(2, 3) = 4;
                x.at(2, 2) = (3 * n - 5 * k - 5) / 3;
                x.at(1, 2) = Theta + 4;
                rc.wp = (3LL * n + 10LL * k - 47) / 3;
            }
            return rc;
        }
    }
    return std::nullopt;
}

}  // namespace wpolar
