#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles use
// plain adjacency-matrix loops and exhaustive enumeration on purpose: they
// must not share an implementation path with the library code they check.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tridom/digraph.hpp"
#include "tridom/tournament.hpp"

namespace testing_support {

inline tridom::Digraph make_cycle(int n) {
    tridom::Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    return d;
}

inline tridom::Digraph make_chain(int n) {
    tridom::Digraph d(n);
    for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
    return d;
}

inline tridom::Digraph make_two_cycle() {
    tridom::Digraph d(2);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    return d;
}

// Quadratic-residue tournament on 7 vertices: i -> i + {1, 2, 4} (mod 7).
inline tridom::Digraph make_paley7() {
    tridom::Digraph d(7);
    for (int i = 0; i < 7; ++i)
        for (int delta : {1, 2, 4}) d.add_arc(i, (i + delta) % 7);
    return d;
}

inline std::vector<std::vector<bool>> adjacency(const tridom::Digraph& d) {
    std::vector<std::vector<bool>> adj(d.order(), std::vector<bool>(d.order(), false));
    for (const auto& [u, v] : d.arcs()) adj[u][v] = true;
    return adj;
}

// Shortest directed cycle length by plain BFS from every vertex, or nullopt
// when acyclic.
inline std::optional<int> oracle_shortest_cycle(const tridom::Digraph& d) {
    const auto adj = adjacency(d);
    const int n = d.order();
    int best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v = 0; v < n; ++v) {
                if (!adj[u][v]) continue;
                if (v == s) {
                    const int len = dist[u] + 1;
                    if (best < 0 || len < best) best = len;
                } else if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// All starting vertices of maximum-length simple directed paths, found by
// enumerating every simple path. Returns nullopt when the digraph has a
// cycle (detected by a vertex reachable from itself).
inline std::optional<std::vector<int>> oracle_max_path_starts(const tridom::Digraph& d) {
    if (oracle_shortest_cycle(d)) return std::nullopt;
    const auto adj = adjacency(d);
    const int n = d.order();
    int global_best = 0;
    std::vector<int> best_len(n, 0);
    for (int s = 0; s < n; ++s) {
        // DFS over all simple paths starting at s.
        std::vector<int> stack_vertex{s};
        std::vector<bool> on_path(n, false);
        on_path[s] = true;
        int best = 0;
        std::function<void(int, int)> walk = [&](int u, int len) {
            best = std::max(best, len);
            for (int v = 0; v < n; ++v) {
                if (adj[u][v] && !on_path[v]) {
                    on_path[v] = true;
                    walk(v, len + 1);
                    on_path[v] = false;
                }
            }
        };
        walk(s, 0);
        best_len[s] = best;
        global_best = std::max(global_best, best);
    }
    std::vector<int> starts;
    for (int v = 0; v < n; ++v)
        if (best_len[v] == global_best) starts.push_back(v);
    return starts;
}

// Property S_k by direct enumeration; returns the first failing k-set in
// colex order, or nullopt when the property holds.
inline std::optional<std::vector<int>> oracle_sk_counterexample(const tridom::Digraph& d, int k) {
    const auto adj = adjacency(d);
    const int n = d.order();
    std::vector<std::vector<int>> sets;
    std::vector<int> combo;
    std::function<void(int)> gen = [&](int low) {
        if (static_cast<int>(combo.size()) == k) {
            sets.push_back(combo);
            return;
        }
        for (int v = low; v < n; ++v) {
            combo.push_back(v);
            gen(v + 1);
            combo.pop_back();
        }
    };
    gen(0);
    // Sort by reversed tuple = colexicographic order. The generator above
    // emits ascending sets; sort to be explicit.
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (const auto& x : sets) {
        bool dominated = false;
        for (int v = 0; v < n && !dominated; ++v) {
            if (std::find(x.begin(), x.end(), v) != x.end()) continue;
            bool all = true;
            for (int m : x)
                if (!adj[v][m]) all = false;
            if (all) dominated = true;
        }
        if (!dominated) return x;
    }
    return std::nullopt;
}

inline bool oracle_is_dominating(const tridom::Tournament3& t, const std::vector<int>& x) {
    const int n = t.order();
    std::set<int> inx(x.begin(), x.end());
    std::set<int> covered;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                const int tail = t.tail_of(a, b, c);
                if (!inx.count(tail)) continue;
                for (int m : {a, b, c})
                    if (m != tail) covered.insert(m);
            }
    for (int v = 0; v < n; ++v)
        if (!inx.count(v) && !covered.count(v)) return false;
    return true;
}

// Exact domination number with the lexicographically least witness, by
// enumerating subsets in size order and lexicographic order within a size.
inline std::pair<int, std::vector<int>> oracle_domination(const tridom::Tournament3& t) {
    const int n = t.order();
    for (int size = 1; size <= n; ++size) {
        std::vector<int> combo;
        std::function<std::optional<std::vector<int>>(int)> gen =
            [&](int low) -> std::optional<std::vector<int>> {
            if (static_cast<int>(combo.size()) == size) {
                if (oracle_is_dominating(t, combo)) return combo;
                return std::nullopt;
            }
            for (int v = low; v < n; ++v) {
                combo.push_back(v);
                if (auto r = gen(v + 1)) return r;
                combo.pop_back();
            }
            return std::nullopt;
        };
        if (auto witness = gen(0)) return {size, *witness};
    }
    return {n, {}};
}

// Pair-tail property by an independent scan: collect the four tails of
// every 4-set and fail when they are pairwise distinct.
inline std::optional<std::array<int, 4>> oracle_pair_tail_counterexample(
    const tridom::Tournament3& t) {
    const int n = t.order();
    for (int e = 3; e < n; ++e)
        for (int c = 2; c < e; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) {
                    std::set<int> tails{t.tail_of(a, b, c), t.tail_of(a, b, e),
                                        t.tail_of(a, c, e), t.tail_of(b, c, e)};
                    if (tails.size() == 4) return std::array<int, 4>{a, b, c, e};
                }
    return std::nullopt;
}

}  // namespace testing_support
