#pragma once

// Test-only oracles, kept independent of the generation path they check.

#include <unordered_set>

#include "wpolar/canonical.hpp"
#include "wpolar/tree.hpp"

namespace oracle {

// Decode a Pruefer sequence (n-2 entries in 0..n-1) into a labeled tree.
inline wpolar::Tree prufer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int v : seq) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (ptr < n && deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
    return wpolar::make_tree(n, edges);
}

// Count isomorphism classes of chemical trees of order n by generating every
// labeled tree from its Pruefer sequence, filtering on degree, and
// deduplicating by canonical form. Practical for n <= 9.
inline long long prufer_chemical_count(int n) {
    if (n == 1 || n == 2) return 1;
    std::unordered_set<wpolar::Code, wpolar::CodeHash> classes;
    std::vector<int> seq(n - 2, 0);
    std::vector<int> appear(n, 0);
    while (true) {
        bool ok = true;
        std::fill(appear.begin(), appear.end(), 0);
        for (int v : seq)
            if (++appear[v] > 3) ok = false;  // degree = appearances + 1
        if (ok) {
            wpolar::Tree t = prufer_decode(n, seq);
            if (wpolar::is_chemical(t)) classes.insert(wpolar::canonical_form(t));
        }
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) {
            seq[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[i];
    }
    return static_cast<long long>(classes.size());
}

// Small named trees used across the suites.
inline wpolar::Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return wpolar::make_tree(n, e);
}

inline wpolar::Tree star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return wpolar::make_tree(leaves + 1, e);
}

// Path 0-1-2-3 plus a pendent 4 on vertex 1 (the 2-methylbutane skeleton).
inline wpolar::Tree methylbutane() {
    return wpolar::make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
}

// Two degree-3 vertices joined by a length-2 internal path, two leaves each.
inline wpolar::Tree double_broom() {
    return wpolar::make_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
}

}  // namespace oracle
