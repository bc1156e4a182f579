#pragma once

#include <optional>
#include <set>

#include "census.hpp"
#include "tree.hpp"

namespace wpolar {

enum class RuleId { R1, R2, R3a, R3b, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13 };

enum class DeltaSign { Negative, NonPositive, Positive, NonNegative };

enum class PreservedConstraint { BranchingCount, SegmentCount };

struct RewriteRule {
    RuleId id;
    std::string name;
    std::string label;
    PreservedConstraint preserves;
    DeltaSign sign;
    bool has_closed_form;
};

// Bound vertex labels of a rule's pattern variables; layout is per rule.
using RewriteSite = std::vector<int>;

inline const std::vector<RewriteRule>& rule_catalog() {
    static const std::vector<RewriteRule> catalog = {
        {RuleId::R1, "R1",
         "adjacent degree-3 pair w,z: move w's other neighbors onto a low-degree vertex "
         "touching a degree-4 vertex",
         PreservedConstraint::BranchingCount, DeltaSign::Negative, true},
        {RuleId::R2, "R2",
         "degree-3 z between two degree-4 neighbors x,y: contract x-z-y to x-y and splice z "
         "into an edge from a low-degree vertex to a branching vertex",
         PreservedConstraint::BranchingCount, DeltaSign::Negative, true},
        {RuleId::R3a, "R3a",
         "degree-2 v next to degree-3 w: move w's other neighbors onto v",
         PreservedConstraint::BranchingCount, DeltaSign::NonPositive, false},
        {RuleId::R3b, "R3b",
         "degree-2 v next to degree-4 w: move a degree-3 vertex's far neighbors onto v",
         PreservedConstraint::BranchingCount, DeltaSign::NonPositive, false},
        {RuleId::R4, "R4",
         "shorten a pendent path of length > 1 to length 1, lengthening an internal path",
         PreservedConstraint::BranchingCount, DeltaSign::Positive, true},
        {RuleId::R5, "R5",
         "move a degree-2 vertex from an internal path of length > 2 into an edge joining "
         "two branching vertices",
         PreservedConstraint::BranchingCount, DeltaSign::Positive, true},
        {RuleId::R6, "R6",
         "re-hang a degree-4 vertex's non-pendent branch below a pendent vertex on another "
         "branch",
         PreservedConstraint::BranchingCount, DeltaSign::NonNegative, false},
        {RuleId::R7, "R7",
         "path with exactly three degree-3 vertices u,v,w: move w's off-path neighbors onto "
         "u and v",
         PreservedConstraint::SegmentCount, DeltaSign::Negative, true},
        {RuleId::R8, "R8",
         "three degree-3 vertices u,v,w (no path holds three of them): move w's neighbors "
         "off the u- and v-paths onto u and v",
         PreservedConstraint::SegmentCount, DeltaSign::NonPositive, false},
        {RuleId::R9, "R9",
         "degree-3 u with two branching neighbors: splice u into a far edge below a "
         "degree-4 vertex with one branching neighbor",
         PreservedConstraint::SegmentCount, DeltaSign::Negative, false},
        {RuleId::R10, "R10",
         "shorten a pendent path of length > 1 to length 1 (segment-count setting)",
         PreservedConstraint::SegmentCount, DeltaSign::Positive, false},
        {RuleId::R11, "R11",
         "longest path in a maximum-degree-3 tree: detach an interior degree-3 vertex and "
         "its pendent onto the path ends",
         PreservedConstraint::SegmentCount, DeltaSign::Positive, true},
        {RuleId::R12, "R12",
         "move a degree-2 vertex from an internal path of length > 2 into an edge joining "
         "two branching vertices (segment-count setting)",
         PreservedConstraint::SegmentCount, DeltaSign::Positive, false},
        {RuleId::R13, "R13",
         "swap a degree-2 vertex between two non-pendent neighbors into an adjacent "
         "branching pair of larger degree sum",
         PreservedConstraint::SegmentCount, DeltaSign::Positive, true},
    };
    return catalog;
}

inline const RewriteRule& rule_by_id(RuleId id) {
    for (const auto& r : rule_catalog())
        if (r.id == id) return r;
    throw std::logic_error("unknown rule");
}

namespace detail {

// Next vertex on the unique path from `from` to `to`.
inline int first_step(const Tree& t, int from, int to) {
    std::vector<int> par(t.n, -2);
    std::queue<int> q;
    par[from] = -1;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int w : t.adj[v])
            if (par[w] == -2) {
                par[w] = v;
                q.push(w);
            }
    }
    int cur = to;
    while (par[cur] != from) cur = par[cur];
    return cur;
}

inline std::vector<int> path_between(const Tree& t, int a, int b) {
    std::vector<int> par(t.n, -2);
    std::queue<int> q;
    par[a] = -1;
    q.push(a);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == b) break;
        for (int w : t.adj[v])
            if (par[w] == -2) {
                par[w] = v;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Walk from `start` away from `from` through degree-2 vertices; terminal vertex.
inline int chain_terminal(const Tree& t, int from, int start) {
    int prev = from, cur = start;
    while (t.degree(cur) == 2) {
        int nxt = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// Edge (v, w) with v branching lies on an internal path: the walk from w away
// from v through degree-2 vertices ends at a branching vertex.
inline bool edge_on_internal_path(const Tree& t, int v, int w) {
    if (t.degree(v) < 3) return false;
    return t.degree(chain_terminal(t, v, w)) >= 3;
}

inline int branching_neighbor_count(const Tree& t, int v) {
    int c = 0;
    for (int w : t.adj[v])
        if (t.degree(w) >= 3) ++c;
    return c;
}

// Vertices reachable from `root` without crossing `banned` (a neighbor of root).
inline std::vector<int> component_away(const Tree& t, int root, int banned) {
    std::vector<char> seen(t.n, 0);
    std::vector<int> out;
    seen[banned] = 1;
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    out.push_back(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                q.push(w);
            }
    }
    return out;
}

// Apply an edge rewrite; empty when a removed edge is absent, an added edge
// would duplicate, or the result is not a chemical tree of the same order.
inline std::optional<Tree> rewrite(const Tree& t, const std::vector<std::pair<int, int>>& remove,
                                   const std::vector<std::pair<int, int>>& add) {
    auto norm = [](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    std::set<std::pair<int, int>> es;
    for (auto e : t.edges()) es.insert(e);
    for (auto e : remove)
        if (!es.erase(norm(e))) return std::nullopt;
    for (auto e : add) {
        if (e.first == e.second) return std::nullopt;
        if (!es.insert(norm(e)).second) return std::nullopt;
    }
    std::vector<std::pair<int, int>> edges(es.begin(), es.end());
    try {
        Tree r = make_tree(t.n, edges);
        if (!is_chemical(r)) return std::nullopt;
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Removed/added edge lists for a validated site, per rule.
inline void site_edits(const Tree&, RuleId id, const RewriteSite& s,
                       std::vector<std::pair<int, int>>& rem,
                       std::vector<std::pair<int, int>>& add) {
    switch (id) {
        case RuleId::R1: {  // [w, z, w1, w2, u, v]
            int w = s[0], w1 = s[2], w2 = s[3], u = s[4];
            rem = {{w, w1}, {w, w2}};
            add = {{u, w1}, {u, w2}};
            return;
        }
        case RuleId::R2: {  // [z, x, y, u, v]
            int z = s[0], x = s[1], y = s[2], u = s[3], v = s[4];
            rem = {{x, z}, {z, y}, {u, v}};
            add = {{x, y}, {u, z}, {z, v}};
            return;
        }
        case RuleId::R3a: {  // [v, u, w, w1, w2]
            int v = s[0], w = s[2], w1 = s[3], w2 = s[4];
            rem = {{w, w1}, {w, w2}};
            add = {{v, w1}, {v, w2}};
            return;
        }
        case RuleId::R3b: {  // [u, v, w, z, x, z1, z2]
            int v = s[1], z = s[3], z1 = s[5], z2 = s[6];
            rem = {{z, z1}, {z, z2}};
            add = {{v, z1}, {v, z2}};
            return;
        }
        case RuleId::R4:
        case RuleId::R10: {  // [u0, ..., ut, v, w]
            int m = static_cast<int>(s.size());
            int u0 = s[0], ut_1 = s[m - 4], ut = s[m - 3], v = s[m - 2], w = s[m - 1];
            rem = {{ut_1, ut}, {v, w}};
            add = {{v, u0}, {ut_1, w}};
            return;
        }
        case RuleId::R5:
        case RuleId::R12: {  // [u1, u2, u3, u, v]
            int u1 = s[0], u2 = s[1], u3 = s[2], u = s[3], v = s[4];
            rem = {{u1, u2}, {u2, u3}, {u, v}};
            add = {{u1, u3}, {u, u2}, {u2, v}};
            return;
        }
        case RuleId::R6: {  // [u, u1, u2, w1, w2]
            int u = s[0], u1 = s[1], w1 = s[3];
            rem = {{u, u1}};
            add = {{w1, u1}};
            return;
        }
        case RuleId::R7:
        case RuleId::R8: {  // [u, v, w, w1, w2]
            int u = s[0], v = s[1], w = s[2], w1 = s[3], w2 = s[4];
            rem = {{w, w1}, {w, w2}};
            add = {{u, w1}, {v, w2}};
            return;
        }
        case RuleId::R9: {  // [v, u, w, vk, vk1]
            int v = s[0], u = s[1], w = s[2], vk = s[3], vk1 = s[4];
            rem = {{v, u}, {u, w}, {vk, vk1}};
            add = {{v, w}, {vk, u}, {u, vk1}};
            return;
        }
        case RuleId::R11: {  // [v1..vr, i, w]
            int m = static_cast<int>(s.size());
            int i = s[m - 2], w = s[m - 1];
            int vi = s[i - 1], vim1 = s[i - 2], vip1 = s[i];
            int v2 = s[1], vr_1 = s[m - 4];
            rem = {{w, vi}, {vim1, vi}, {vi, vip1}};
            add = {{vim1, vip1}, {vi, vr_1}, {v2, w}};
            return;
        }
        case RuleId::R13: {  // [z, x, y, xp, yp]
            int z = s[0], x = s[1], y = s[2], xp = s[3], yp = s[4];
            rem = {{x, z}, {z, y}, {xp, yp}};
            add = {{x, y}, {xp, z}, {z, yp}};
            return;
        }
    }
    throw std::logic_error("unknown rule");
}

inline std::optional<Tree> apply_unchecked(const Tree& t, RuleId id, const RewriteSite& s) {
    std::vector<std::pair<int, int>> rem, add;
    site_edits(t, id, s, rem, add);
    return rewrite(t, rem, add);
}

// Sum of (deg - 1) over the neighbors of v.
inline long long nbr_weight(const Tree& t, int v) {
    long long s = 0;
    for (int w : t.adj[v]) s += t.degree(w) - 1;
    return s;
}

inline std::vector<std::pair<int, int>> branching_pairs(const Tree& t) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < t.n; ++u)
        for (int v : t.adj[u])
            if (u < v && t.degree(u) >= 3 && t.degree(v) >= 3) out.emplace_back(u, v);
    return out;
}

// no tree path holds three or more degree-3 vertices
inline bool at_most_two_threes_per_path(const Tree& t) {
    std::vector<int> threes;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 3) threes.push_back(v);
    for (std::size_t a = 0; a < threes.size(); ++a)
        for (std::size_t b = a + 1; b < threes.size(); ++b) {
            int cnt = 0;
            for (int v : path_between(t, threes[a], threes[b]))
                if (t.degree(v) == 3) ++cnt;
            if (cnt >= 3) return false;
        }
    return true;
}

inline int segment_count_or_zero(const Tree& t) { return t.n < 2 ? 0 : segment_count(t); }

inline bool segment_window(const Tree& t) {
    int k = segment_count_or_zero(t);
    return k >= 7 && k <= t.n - 2;
}

inline void find_sites_r1(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 7) return;
    for (int w = 0; w < t.n; ++w) {
        if (t.degree(w) != 3) continue;
        for (int z : t.adj[w]) {
            if (t.degree(z) != 3) continue;
            std::vector<int> others;
            for (int x : t.adj[w])
                if (x != z) others.push_back(x);
            int w1 = others[0], w2 = others[1];
            for (int u = 0; u < t.n; ++u) {
                if (t.degree(u) > 2 || u == w || u == z || u == w1 || u == w2) continue;
                for (int v : t.adj[u]) {
                    if (t.degree(v) != 4) continue;
                    RewriteSite s{w, z, w1, w2, u, v};
                    if (apply_unchecked(t, RuleId::R1, s)) out.push_back(s);
                }
            }
        }
    }
}

inline void find_sites_r2(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 7) return;
    for (int z = 0; z < t.n; ++z) {
        if (t.degree(z) != 3) continue;
        const auto& nz = t.adj[z];
        for (std::size_t a = 0; a < nz.size(); ++a)
            for (std::size_t b = a + 1; b < nz.size(); ++b) {
                int x = nz[a], y = nz[b];
                if (t.degree(x) != 4 || t.degree(y) != 4) continue;
                for (int u = 0; u < t.n; ++u) {
                    if (t.degree(u) > 2 || u == z || t.has_edge(u, z)) continue;
                    for (int v : t.adj[u]) {
                        if (t.degree(v) < 3 || v == z || t.has_edge(v, z)) continue;
                        RewriteSite s{z, x, y, u, v};
                        if (apply_unchecked(t, RuleId::R2, s)) out.push_back(s);
                    }
                }
            }
    }
}

inline void find_sites_r3a(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 7) return;
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) != 2) continue;
        for (int w : t.adj[v]) {
            if (t.degree(w) != 3) continue;
            int u = (t.adj[v][0] == w) ? t.adj[v][1] : t.adj[v][0];
            std::vector<int> others;
            for (int x : t.adj[w])
                if (x != v) others.push_back(x);
            RewriteSite s{v, u, w, others[0], others[1]};
            if (apply_unchecked(t, RuleId::R3a, s)) out.push_back(s);
        }
    }
}

inline void find_sites_r3b(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 7) return;
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) != 2) continue;
        for (int w : t.adj[v]) {
            if (t.degree(w) != 4) continue;
            int u = (t.adj[v][0] == w) ? t.adj[v][1] : t.adj[v][0];
            for (int z = 0; z < t.n; ++z) {
                if (t.degree(z) != 3 || z == u || z == v || z == w) continue;
                int x = first_step(t, z, w);
                std::vector<int> rest;
                for (int y : t.adj[z])
                    if (y != x) rest.push_back(y);
                RewriteSite s{u, v, w, z, x, rest[0], rest[1]};
                if (apply_unchecked(t, RuleId::R3b, s)) out.push_back(s);
            }
        }
    }
}

inline void find_sites_pendent_shorten(const Tree& t, RuleId id, std::vector<RewriteSite>& out) {
    if (id == RuleId::R10 && !segment_window(t)) return;
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) < 3) continue;
        for (int first : t.adj[v]) {
            if (t.degree(first) != 2) continue;
            // pendent path v, ut=first, ..., u0 with at least one interior degree-2
            std::vector<int> chain{first};
            int prev = v, cur = first;
            while (t.degree(cur) == 2) {
                int nxt = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
                chain.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (t.degree(cur) != 1) continue;
            for (int w : t.adj[v]) {
                if (w == first) continue;
                if (!edge_on_internal_path(t, v, w)) continue;
                RewriteSite s(chain.rbegin(), chain.rend());  // u0 .. ut
                s.push_back(v);
                s.push_back(w);
                if (apply_unchecked(t, id, s)) out.push_back(s);
            }
        }
    }
}

inline void find_sites_internal_shift(const Tree& t, RuleId id, std::vector<RewriteSite>& out) {
    if (id == RuleId::R12 && !segment_window(t)) return;
    auto pairs = branching_pairs(t);
    if (pairs.empty()) return;
    for (int u1 = 0; u1 < t.n; ++u1) {
        if (t.degree(u1) < 3) continue;
        for (int u2 : t.adj[u1]) {
            if (t.degree(u2) != 2) continue;
            int u3 = (t.adj[u2][0] == u1) ? t.adj[u2][1] : t.adj[u2][0];
            if (t.degree(u3) != 2) continue;  // internal path shorter than 3
            if (t.degree(chain_terminal(t, u2, u3)) < 3) continue;
            for (auto [u, v] : pairs) {
                RewriteSite s{u1, u2, u3, u, v};
                if (apply_unchecked(t, id, s)) out.push_back(s);
            }
        }
    }
}

inline void find_sites_r6(const Tree& t, std::vector<RewriteSite>& out) {
    for (int u = 0; u < t.n; ++u) {
        if (t.degree(u) != 4) continue;
        for (int u1 : t.adj[u]) {
            if (t.degree(u1) < 2) continue;
            for (int u2 : t.adj[u]) {
                if (u2 == u1) continue;
                for (int w1 : component_away(t, u2, u)) {
                    if (t.degree(w1) != 1) continue;
                    int w2 = t.adj[w1][0];
                    RewriteSite s{u, u1, u2, w1, w2};
                    if (apply_unchecked(t, RuleId::R6, s)) out.push_back(s);
                }
            }
        }
    }
}

inline void find_sites_r7(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 6) return;
    std::vector<int> threes;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 3) threes.push_back(v);
    for (int u : threes)
        for (int w : threes) {
            if (u == w) continue;
            auto path = path_between(t, u, w);
            int v = -1, cnt = 0;
            for (int p : path)
                if (t.degree(p) == 3) {
                    ++cnt;
                    if (p != u && p != w) v = p;
                }
            if (cnt != 3 || v < 0) continue;
            if (branching_neighbor_count(t, u) < 1) continue;
            if (branching_neighbor_count(t, v) < 2) continue;
            if (!t.has_edge(v, w)) {
                bool deg4 = false;
                for (int y : t.adj[v])
                    if (t.degree(y) == 4) deg4 = true;
                if (!deg4) continue;
            }
            int w0 = path[path.size() - 2];
            std::vector<int> off;
            for (int x : t.adj[w])
                if (x != w0) off.push_back(x);
            RewriteSite s{u, v, w, off[0], off[1]};
            if (apply_unchecked(t, RuleId::R7, s)) out.push_back(s);
        }
}

inline void find_sites_r8(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 6) return;
    std::vector<int> threes;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 3) threes.push_back(v);
    if (threes.size() <= 2) return;
    if (!at_most_two_threes_per_path(t)) return;
    for (int w : threes)
        for (int u : threes)
            for (int v : threes) {
                if (u == w || v == w || u == v) continue;
                int zu = first_step(t, w, u), zv = first_step(t, w, v);
                if (zu != zv) continue;
                std::vector<int> off;
                for (int x : t.adj[w])
                    if (x != zu) off.push_back(x);
                bool interior_ok = true;
                for (int p : path_between(t, u, w))
                    if (p != u && p != v && p != w && t.degree(p) != 4) interior_ok = false;
                for (int p : path_between(t, v, w))
                    if (p != u && p != v && p != w && t.degree(p) != 4) interior_ok = false;
                if (!interior_ok) continue;
                RewriteSite s{u, v, w, off[0], off[1]};
                if (apply_unchecked(t, RuleId::R8, s)) out.push_back(s);
            }
}

inline void find_sites_r9(const Tree& t, std::vector<RewriteSite>& out) {
    if (t.n < 6) return;
    for (int u = 0; u < t.n; ++u) {
        if (t.degree(u) != 3) continue;
        for (int v : t.adj[u]) {
            if (t.degree(v) < 3) continue;
            for (int w : t.adj[u]) {
                if (w == v || t.degree(w) != 4) continue;
                for (int vk : component_away(t, w, u)) {
                    if (t.degree(vk) != 4 || branching_neighbor_count(t, vk) != 1) continue;
                    int toward_u = (vk == w) ? u : first_step(t, vk, u);
                    for (int vk1 : t.adj[vk]) {
                        if (vk1 == toward_u || t.degree(vk1) > 2) continue;
                        RewriteSite s{v, u, w, vk, vk1};
                        if (apply_unchecked(t, RuleId::R9, s)) out.push_back(s);
                    }
                }
            }
        }
    }
}

inline void find_sites_r11(const Tree& t, std::vector<RewriteSite>& out) {
    if (!segment_window(t) || t.max_degree() > 3) return;
    // all eccentricities
    std::vector<std::vector<int>> dist(t.n, std::vector<int>(t.n, -1));
    for (int s0 = 0; s0 < t.n; ++s0) {
        std::queue<int> q;
        dist[s0][s0] = 0;
        q.push(s0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : t.adj[v])
                if (dist[s0][w] < 0) {
                    dist[s0][w] = dist[s0][v] + 1;
                    q.push(w);
                }
        }
    }
    int diam = 0;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) diam = std::max(diam, dist[a][b]);
    if (diam < 5) return;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b) {
            if (a == b || dist[a][b] != diam) continue;
            auto path = path_between(t, a, b);
            int r = static_cast<int>(path.size());
            if (t.degree(path[1]) != 3 || t.degree(path[r - 2]) != 3 ||
                t.degree(path[r - 3]) != 2)
                continue;
            for (int i = 3; i <= r - 3; ++i) {  // 1-based position on the path
                int vi = path[i - 1];
                if (t.degree(vi) != 3) continue;
                int w = -1;
                for (int x : t.adj[vi])
                    if (x != path[i - 2] && x != path[i]) w = x;
                if (w < 0 || t.degree(w) != 1) continue;
                if (!(t.degree(path[2]) <= t.degree(path[i - 2]) &&
                      t.degree(path[i - 2]) <= t.degree(path[i])))
                    continue;
                RewriteSite s(path.begin(), path.end());
                s.push_back(i);
                s.push_back(w);
                if (apply_unchecked(t, RuleId::R11, s)) out.push_back(s);
            }
        }
}

inline void find_sites_r13(const Tree& t, std::vector<RewriteSite>& out) {
    if (!segment_window(t)) return;
    auto pairs = branching_pairs(t);
    for (int z = 0; z < t.n; ++z) {
        if (t.degree(z) != 2) continue;
        int x = t.adj[z][0], y = t.adj[z][1];
        if (t.degree(x) < 2 || t.degree(y) < 2) continue;
        int sum = t.degree(x) + t.degree(y);
        if (!(4 < sum && sum < 8)) continue;
        for (auto [xp, yp] : pairs) {
            if (t.degree(xp) + t.degree(yp) <= sum) continue;
            RewriteSite s{z, x, y, xp, yp};
            if (apply_unchecked(t, RuleId::R13, s)) out.push_back(s);
        }
    }
}

}  // namespace detail

// All vertex bindings satisfying the rule's hypotheses, lexicographic order.
inline std::vector<RewriteSite> find_sites(const Tree& t, const RewriteRule& r) {
    std::vector<RewriteSite> out;
    switch (r.id) {
        case RuleId::R1: detail::find_sites_r1(t, out); break;
        case RuleId::R2: detail::find_sites_r2(t, out); break;
        case RuleId::R3a: detail::find_sites_r3a(t, out); break;
        case RuleId::R3b: detail::find_sites_r3b(t, out); break;
        case RuleId::R4: detail::find_sites_pendent_shorten(t, RuleId::R4, out); break;
        case RuleId::R5: detail::find_sites_internal_shift(t, RuleId::R5, out); break;
        case RuleId::R6: detail::find_sites_r6(t, out); break;
        case RuleId::R7: detail::find_sites_r7(t, out); break;
        case RuleId::R8: detail::find_sites_r8(t, out); break;
        case RuleId::R9: detail::find_sites_r9(t, out); break;
        case RuleId::R10: detail::find_sites_pendent_shorten(t, RuleId::R10, out); break;
        case RuleId::R11: detail::find_sites_r11(t, out); break;
        case RuleId::R12: detail::find_sites_internal_shift(t, RuleId::R12, out); break;
        case RuleId::R13: detail::find_sites_r13(t, out); break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Tree apply(const Tree& t, const RewriteRule& r, const RewriteSite& s) {
    auto sites = find_sites(t, r);
    if (!std::binary_search(sites.begin(), sites.end(), s))
        throw std::invalid_argument("stale rewrite site: hypotheses no longer hold");
    auto res = detail::apply_unchecked(t, r.id, s);
    if (!res) throw std::invalid_argument("rewrite produced an invalid tree");
    return *res;
}

// W_p(before) - W_p(after).
inline long long delta_wp(const Tree& t, const RewriteRule& r, const RewriteSite& s) {
    return wp_edge(t) - wp_edge(apply(t, r, s));
}

// The algebraic delta stated alongside the rule, where one exists, evaluated
// from the degrees at the site. Compared against delta_wp by the harness.
inline std::optional<long long> closed_form_delta(const Tree& t, const RewriteRule& r,
                                                  const RewriteSite& s) {
    auto d = [&](int v) -> long long { return t.degree(v); };
    switch (r.id) {
        case RuleId::R1: {  // [w, z, w1, w2, u, v]
            long long dw1 = d(s[2]), dw2 = d(s[3]), du = d(s[4]);
            long long S = detail::nbr_weight(t, s[4]);
            return 4 + 2 * (dw1 - 1) + 2 * (dw2 - 1) + (du - 1) * S - (du + 1) * (dw1 - 1) -
                   (du + 1) * (dw2 - 1) - (du + 1) * S;
        }
        case RuleId::R2: {  // [z, x, y, u, v]
            long long du = d(s[3]), dv = d(s[4]);
            return 8 + du * dv - 3 * du - 3 * dv;
        }
        case RuleId::R4: {  // [u0..ut, v, w]
            int m = static_cast<int>(s.size());
            long long dv = d(s[m - 2]), dw = d(s[m - 1]);
            return (dw - 1) * (dv - 2);
        }
        case RuleId::R5: {  // [u1, u2, u3, u, v]
            long long du = d(s[3]), dv = d(s[4]);
            return du * dv - 2 * du - 2 * dv + 4;
        }
        case RuleId::R7: {  // [u, v, w, w1, w2]
            int u = s[0], v = s[1], w = s[2];
            long long w0 = -1;
            auto path = detail::path_between(t, u, w);
            w0 = path[path.size() - 2];
            return -detail::nbr_weight(t, u) - detail::nbr_weight(t, v) +
                   2 * (d(static_cast<int>(w0)) - 1) - (d(s[3]) - 1) - (d(s[4]) - 1);
        }
        case RuleId::R11: {  // [v1..vr, i, w]
            int m = static_cast<int>(s.size());
            int i = s[m - 2];
            long long d3 = d(s[2]), dm1 = d(s[i - 2]), dp1 = d(s[i]);
            return -5 - d3 + 3 * dm1 + 3 * dp1 - dm1 * dp1;
        }
        case RuleId::R13: {  // [z, x, y, xp, yp]
            long long dx = d(s[1]), dy = d(s[2]), dxp = d(s[3]), dyp = d(s[4]);
            return 2 * (dx + dy) - 2 * (dxp + dyp) + dxp * dyp - dx * dy;
        }
        default: return std::nullopt;
    }
}

inline bool sign_conforms(DeltaSign sign, long long delta) {
    switch (sign) {
        case DeltaSign::Negative: return delta < 0;
        case DeltaSign::NonPositive: return delta <= 0;
        case DeltaSign::Positive: return delta > 0;
        case DeltaSign::NonNegative: return delta >= 0;
    }
    return false;
}

namespace detail {

// Fast path for sweeps: sites come straight from find_sites.
inline long long delta_unchecked(const Tree& t, RuleId id, const RewriteSite& s) {
    auto res = apply_unchecked(t, id, s);
    if (!res) throw std::logic_error("unchecked delta on invalid site");
    return wp_edge(t) - wp_edge(*res);
}

}  // namespace detail

}  // namespace wpolar
