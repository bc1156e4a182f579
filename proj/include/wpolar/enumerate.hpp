#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "canonical.hpp"
#include "tree.hpp"

namespace wpolar {

struct EnumerationQuery {
    int n = 1;
    std::optional<int> b;  // branching-vertex count filter
    std::optional<int> k;  // segment count filter
    std::optional<long long> cap;

    void validate() const {
        if (n < 1) throw std::invalid_argument("enumeration order must be at least 1");
        if (b && k) throw std::invalid_argument("at most one of the b and k filters may be set");
        if (b && *b < 0) throw std::invalid_argument("branching filter must be non-negative");
        if (k && *k < 1) throw std::invalid_argument("segment filter must be at least 1");
    }
};

namespace detail {

// Rooted subtree shape with every vertex degree <= 4 and at most `root_cap`
// children at the root. Local labels 0..size-1 in emission order, 0 = root.
struct RootedShape {
    int size = 1;
    Code code;  // level sequence, root depth 0
    std::vector<std::pair<int, int>> edges;
};

// Canonical rooted shapes by size, children chosen in a fixed total order
// (size descending, then pool position). Each rooted isomorphism class with
// root degree <= 3 appears exactly once per size.
class ShapePool {
  public:
    explicit ShapePool(int max_size) : pool_(std::max(max_size, 1) + 1) {
        pool_[1] = {RootedShape{1, Code{0}, {}}};
        for (int s = 2; s <= max_size; ++s) build(s);
    }

    const std::vector<RootedShape>& of_size(int s) const { return pool_[s]; }

    // Assemble a tree from root children given as (size, index) picks.
    // Returns local edges of the composed rooted tree; vertex 0 is the root.
    std::vector<std::pair<int, int>> compose(const std::vector<std::pair<int, int>>& picks) const {
        std::vector<std::pair<int, int>> edges;
        int offset = 1;
        for (auto [cs, ci] : picks) {
            const RootedShape& ch = pool_[cs][ci];
            edges.emplace_back(0, offset);
            for (auto [a, b] : ch.edges) edges.emplace_back(a + offset, b + offset);
            offset += ch.size;
        }
        return edges;
    }

    // Enumerate child multisets of total size `total`, at most `slots` children,
    // each of size <= max_child. Picks run non-increasing in the fixed order
    // (size descending, pool position ascending), so every multiset appears once.
    template <class F>
    void child_multisets(int total, int slots, int max_child, F&& yield) const {
        std::vector<std::pair<int, int>> picks;
        rec(total, slots, std::min(max_child, static_cast<int>(pool_.size()) - 1), 0, picks,
            yield);
    }

  private:
    template <class F>
    void rec(int remaining, int slots, int max_size, int min_index,
             std::vector<std::pair<int, int>>& picks, F&& yield) const {
        if (remaining == 0) {
            yield(picks);
            return;
        }
        if (slots == 0) return;
        for (int s = std::min(max_size, remaining); s >= 1; --s) {
            if (static_cast<long long>(s) * slots < remaining) return;  // smaller s cannot reach
            int start = (s == max_size) ? min_index : 0;
            for (int i = start; i < static_cast<int>(pool_[s].size()); ++i) {
                picks.emplace_back(s, i);
                rec(remaining - s, slots - 1, s, i, picks, yield);
                picks.pop_back();
            }
        }
    }

    void build(int s) {
        std::vector<RootedShape> shapes;
        child_multisets(s - 1, 3, s - 1, [&](const std::vector<std::pair<int, int>>& picks) {
            RootedShape sh;
            sh.size = s;
            sh.edges = compose(picks);
            sh.code = Code{0};
            for (auto [cs, ci] : picks) {
                const Code& cc = pool_[cs][ci].code;
                for (int d : cc) sh.code.push_back(d + 1);
            }
            shapes.push_back(std::move(sh));
        });
        pool_[s] = std::move(shapes);
    }

    std::vector<std::vector<RootedShape>> pool_;
};

// All free trees of order n with maximum degree <= 4, one per isomorphism
// class, built from canonical rooted shapes hung at the centroid. A tree has
// one centroid (all root subtrees of size <= floor((n-1)/2)) or two adjacent
// centroids (n even, two halves of size n/2); the split makes each class
// appear exactly once with no post-hoc isomorphism rejection.
template <class F>
void generate_free_trees(int n, F&& yield) {
    if (n == 1) {
        yield(make_tree(1, {}));
        return;
    }
    ShapePool pool(n / 2);
    const int child_cap = (n - 1) / 2;
    pool.child_multisets(n - 1, 4, child_cap, [&](const std::vector<std::pair<int, int>>& picks) {
        yield(make_tree(n, pool.compose(picks)));
    });
    if (n % 2 == 0) {
        const auto& halves = pool.of_size(n / 2);
        for (int i = 0; i < static_cast<int>(halves.size()); ++i)
            for (int j = i; j < static_cast<int>(halves.size()); ++j) {
                std::vector<std::pair<int, int>> edges;
                edges.emplace_back(0, n / 2);
                for (auto [a, b] : halves[i].edges) edges.emplace_back(a, b);
                for (auto [a, b] : halves[j].edges)
                    edges.emplace_back(a + n / 2, b + n / 2);
                yield(make_tree(n, edges));
            }
    }
}

struct StopEnumeration {};

}  // namespace detail

// Streams exactly one representative per isomorphism class of chemical trees
// of order q.n that satisfy the filter. Deterministic: a fixed query yields a
// fixed sequence.
template <class F>
void enumerate_chemical_trees(const EnumerationQuery& q, F&& yield) {
    q.validate();
    long long yielded = 0;
    auto emit = [&](const Tree& t) {
        if (q.b && branching_count(t) != *q.b) return;
        if (q.k && (t.n < 2 || segment_count(t) != *q.k)) return;
        if (q.cap && yielded >= *q.cap) throw detail::StopEnumeration{};
        ++yielded;
        yield(t);
    };
    try {
        detail::generate_free_trees(q.n, emit);
    } catch (const detail::StopEnumeration&) {
    }
}

inline std::vector<Tree> collect_chemical_trees(const EnumerationQuery& q) {
    std::vector<Tree> out;
    enumerate_chemical_trees(q, [&](const Tree& t) { out.push_back(t); });
    return out;
}

inline long long count_chemical_trees(const EnumerationQuery& q) {
    long long c = 0;
    enumerate_chemical_trees(q, [&](const Tree&) { ++c; });
    return c;
}

enum class Constraint { Branching, Segments };

inline int constraint_value(const Tree& t, Constraint c) {
    return c == Constraint::Branching ? branching_count(t)
                                      : (t.n < 2 ? 1 : segment_count(t));
}

inline std::set<int> realizable_values(int n, Constraint c) {
    if (n < 2) throw std::invalid_argument("realizable_values needs order at least 2");
    std::set<int> vals;
    enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}},
                             [&](const Tree& t) { vals.insert(constraint_value(t, c)); });
    return vals;
}

struct ExtremalTable {
    struct Cell {
        long long min_wp = 0, max_wp = 0;
        Code min_witness, max_witness;
        long long class_size = 0;
    };
    Constraint constraint = Constraint::Branching;
    std::map<std::pair<int, int>, Cell> cells;  // key: (n, constraint value)
};

inline ExtremalTable extremal_table(int n_min, int n_max, Constraint c) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("bad extremal table range");
    ExtremalTable table;
    table.constraint = c;
    for (int n = n_min; n <= n_max; ++n) {
        enumerate_chemical_trees(EnumerationQuery{n, {}, {}, {}}, [&](const Tree& t) {
            if (n < 2 && c == Constraint::Segments) return;
            int v = constraint_value(t, c);
            long long wp = wp_edge(t);
            auto key = std::make_pair(n, v);
            auto it = table.cells.find(key);
            if (it == table.cells.end()) {
                Code code = canonical_form(t);
                table.cells[key] = ExtremalTable::Cell{wp, wp, code, code, 1};
            } else {
                ExtremalTable::Cell& cell = it->second;
                ++cell.class_size;
                if (wp < cell.min_wp) {
                    cell.min_wp = wp;
                    cell.min_witness = canonical_form(t);
                }
                if (wp > cell.max_wp) {
                    cell.max_wp = wp;
                    cell.max_witness = canonical_form(t);
                }
            }
        });
    }
    return table;
}

}  // namespace wpolar
