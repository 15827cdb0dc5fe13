#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tridom/digraph.hpp"

namespace tridom {

enum class SearchMode { exhaustive, random };

struct SearchParams {
    int n = 0;
    int k = 1;
    int l = 2;                     // girth floor: witnesses need girth >= l
    int limit = 10;                // stop after this many witnesses
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;        // random mode
    int trials = 1000;             // random mode
    double arc_probability = 0.5;  // random mode
};

/// Internal/testing knobs. With prune off, the exhaustive search visits
/// every one of the 2^(n(n-1)) arc assignments and filters at the leaves.
struct SearchTuning {
    bool prune = true;
};

struct OrderRecord {
    int n = 0;
    bool exhausted = false;
    std::uint64_t nodes = 0;   // decision-tree nodes visited
    std::uint64_t leaves = 0;  // complete assignments reached
    int witnesses_found = 0;
};

struct SearchReport {
    int k = 0;
    int l = 0;
    SearchMode mode = SearchMode::exhaustive;
    int limit = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int n_lo = 0, n_hi = 0;  // orders covered (equal for a single order)
    std::vector<Digraph> witnesses;
    std::vector<OrderRecord> orders;
    bool exhausted = false;  // whole stated space covered
    std::uint64_t nodes_explored = 0;
    std::uint64_t leaves = 0;
    std::optional<int> min_order;
};

/// Searches for digraphs on n vertices with girth >= l and property S_k.
/// Exhaustive mode walks the n(n-1) arc decisions depth-first (no-arc
/// branch first), pruning assignments that already close a cycle shorter
/// than l and vertices that can no longer acquire an in-neighbor; random
/// mode filters seeded samples. Every witness is re-verified through
/// girth() and has_Sk() before inclusion. Deterministic for fixed
/// parameters and seed.
SearchReport find_digraphs(const SearchParams& params, const SearchTuning& tuning = {});

/// Runs the exhaustive search for n = k+1 .. n_max and stops at the first
/// order with a witness; min_order is that n, or absent when every order
/// was exhausted without one.
SearchReport find_min_order(int k, int l, int n_max, int limit_per_order = 1);

/// Streams every orientation of the complete graph K_n exactly once, in
/// binary-counter order over the C(n,2) vertex pairs (pair i in colex
/// order; counter bit 0 orients small->large). Guarded to n <= 6.
void for_each_tournament_orientation(int n, const std::function<void(const Digraph&)>& fn);

/// Seeded G(n,p) digraph: each ordered pair becomes an arc independently
/// with probability p. With min_girth set, rejection-samples until the
/// girth is at least that (throws RetriesExhaustedError after max_retries
/// attempts).
Digraph random_digraph(int n, double p, std::uint64_t seed,
                       std::optional<int> min_girth = std::nullopt, int max_retries = 10000);

}  // namespace tridom
