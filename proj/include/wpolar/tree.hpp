#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpolar {

// Labeled tree on vertices 0..n-1, adjacency lists kept sorted.
// Values are immutable after construction; all operations below are pure.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        if (n > 1) e.reserve(n - 1);
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const Tree&) const = default;
};

inline Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("tree order must be at least 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("a tree on n vertices has exactly n-1 edges");
    Tree t;
    t.n = n;
    t.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("edge endpoint out of range");
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (auto& a : t.adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge");
    }
    // with exactly n-1 edges, connected <=> acyclic <=> tree
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("edge set is not connected");
    return t;
}

inline bool is_chemical(const Tree& t) { return t.max_degree() <= 4; }

struct DegreeCensus {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    int total() const { return n1 + n2 + n3 + n4; }
    bool operator==(const DegreeCensus&) const = default;
};

inline DegreeCensus degree_census(const Tree& t) {
    DegreeCensus c;
    for (int v = 0; v < t.n; ++v) {
        switch (t.degree(v)) {
            case 0: break;  // order-1 tree only
            case 1: ++c.n1; break;
            case 2: ++c.n2; break;
            case 3: ++c.n3; break;
            case 4: ++c.n4; break;
            default: throw std::invalid_argument("degree census requires maximum degree 4");
        }
    }
    return c;
}

inline long long wp_edge(const Tree& t) {
    long long s = 0;
    for (int u = 0; u < t.n; ++u)
        for (int v : t.adj[u])
            if (u < v) s += static_cast<long long>(t.degree(u) - 1) * (t.degree(v) - 1);
    return s;
}

// Unordered vertex pairs at distance exactly 3, by per-vertex BFS truncated at depth 3.
inline long long wp_distance(const Tree& t) {
    long long pairs = 0;
    std::vector<int> dist(t.n);
    std::queue<int> q;
    for (int s = 0; s < t.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (dist[v] == 3) continue;
            for (int w : t.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int v = s + 1; v < t.n; ++v)
            if (dist[v] == 3) ++pairs;
    }
    return pairs;
}

inline int branching_count(const Tree& t) {
    DegreeCensus c = degree_census(t);
    return c.n3 + c.n4;
}

// Maximal path whose endpoints have degree != 2 and interior vertices degree 2.
struct Segment {
    std::vector<int> vertices;  // path order, smaller endpoint first
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

inline std::vector<Segment> segments(const Tree& t) {
    if (t.n < 2) throw std::invalid_argument("segments need at least two vertices");
    std::vector<Segment> out;
    for (int s = 0; s < t.n; ++s) {
        if (t.degree(s) == 2) continue;
        for (int first : t.adj[s]) {
            std::vector<int> path{s, first};
            int prev = s, cur = first;
            while (t.degree(cur) == 2) {
                int nxt = (t.adj[cur][0] == prev) ? t.adj[cur][1] : t.adj[cur][0];
                path.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (s < cur) out.push_back(Segment{std::move(path)});
        }
    }
    return out;
}

inline int segment_count(const Tree& t) { return static_cast<int>(segments(t).size()); }

enum class PathKind { Pendent, Internal };

struct PathClassification {
    PathKind kind;
    int length;
    bool operator==(const PathClassification&) const = default;
};

inline std::vector<PathClassification> classify_paths(const Tree& t) {
    if (branching_count(t) == 0)
        throw std::invalid_argument("path classification needs a branching vertex");
    std::vector<PathClassification> out;
    for (const Segment& s : segments(t)) {
        int a = t.degree(s.vertices.front());
        int b = t.degree(s.vertices.back());
        out.push_back({(a >= 3 && b >= 3) ? PathKind::Internal : PathKind::Pendent, s.length()});
    }
    return out;
}

}  // namespace wpolar
