#pragma once

#include "tree.hpp"

namespace wpolar {

// Edge counts by unordered endpoint-degree pair {i, j}, 1 <= i <= j <= 4.
struct EdgeTypeCensus {
    int x[5][5] = {};

    int& at(int i, int j) {
        if (i > j) std::swap(i, j);
        return x[i][j];
    }
    int get(int i, int j) const {
        if (i > j) std::swap(i, j);
        return x[i][j];
    }
    int total() const {
        int s = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i; j <= 4; ++j) s += x[i][j];
        return s;
    }
    bool operator==(const EdgeTypeCensus& o) const {
        for (int i = 1; i <= 4; ++i)
            for (int j = i; j <= 4; ++j)
                if (x[i][j] != o.x[i][j]) return false;
        return true;
    }
};

inline EdgeTypeCensus measured_edge_census(const Tree& t) {
    if (!is_chemical(t)) throw std::invalid_argument("edge census requires maximum degree 4");
    EdgeTypeCensus c;
    for (int u = 0; u < t.n; ++u)
        for (int v : t.adj[u])
            if (u < v) ++c.at(t.degree(u), t.degree(v));
    return c;
}

inline long long wp_from_census(const EdgeTypeCensus& c) {
    long long s = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) s += static_cast<long long>(c.x[i][j]) * (i - 1) * (j - 1);
    return s;
}

// Edge total and per-degree incidence agree with the vertex census.
inline bool census_consistent(const EdgeTypeCensus& c, const DegreeCensus& d, int n) {
    if (c.total() != n - 1) return false;
    const int nd[5] = {0, d.n1, d.n2, d.n3, d.n4};
    for (int deg = 1; deg <= 4; ++deg) {
        int inc = 0;
        for (int j = 1; j <= 4; ++j) inc += c.get(deg, j) * (j == deg ? 2 : 1);
        if (inc != deg * nd[deg]) return false;
    }
    return true;
}

}  // namespace wpolar
