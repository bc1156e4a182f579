#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "tree.hpp"

namespace wpolar {

// Canonical code: rooted level sequence (preorder depths, children ordered by
// descending subsequence). Equal codes <=> isomorphic trees.
using Code = std::vector<int>;

namespace detail {

inline int farthest_from(const Tree& t, int s, std::vector<int>& parent) {
    std::vector<int> dist(t.n, -1);
    parent.assign(t.n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int best = s;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
                if (dist[w] > dist[best] || (dist[w] == dist[best] && w < best)) best = w;
            }
    }
    return best;
}

inline Code rooted_code_rec(const Tree& t, int v, int parent, int depth) {
    std::vector<Code> kids;
    kids.reserve(t.adj[v].size());
    for (int w : t.adj[v])
        if (w != parent) kids.push_back(rooted_code_rec(t, w, v, depth + 1));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    Code c{depth};
    for (auto& k : kids) c.insert(c.end(), k.begin(), k.end());
    return c;
}

}  // namespace detail

// One or two adjacent central vertices (midpoints of a diameter path), sorted.
inline std::vector<int> tree_centers(const Tree& t) {
    if (t.n == 1) return {0};
    std::vector<int> par;
    int a = detail::farthest_from(t, 0, par);
    int b = detail::farthest_from(t, a, par);
    std::vector<int> path;
    for (int v = b; v != -1; v = par[v]) path.push_back(v);
    int m = static_cast<int>(path.size());
    if (m % 2 == 1) return {path[m / 2]};
    std::vector<int> c{path[m / 2 - 1], path[m / 2]};
    std::sort(c.begin(), c.end());
    return c;
}

inline Code rooted_code(const Tree& t, int root) {
    return detail::rooted_code_rec(t, root, -1, 0);
}

// Relabeling-invariant code: the lexicographically larger rooted code over the center(s).
inline Code canonical_form(const Tree& t) {
    Code best;
    bool first = true;
    for (int c : tree_centers(t)) {
        Code cand = rooted_code(t, c);
        if (first || cand > best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

inline std::string code_string(const Code& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(c[i]);
    }
    return s;
}

struct CodeHash {
    std::size_t operator()(const Code& c) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : c) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace wpolar
