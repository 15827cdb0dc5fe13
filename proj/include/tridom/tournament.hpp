#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tridom/combinatorics.hpp"
#include "tridom/errors.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// Complete 3-uniform tournament: every triple {a<b<c} of vertices carries
/// one designated member, its tail. Tails are stored per colex rank as an
/// index 0/1/2 into the sorted triple, so membership holds by encoding.
class Tournament3 {
public:
    explicit Tournament3(int n)
        : n_(n), tails_(static_cast<std::size_t>(choose3(n)), 0) {
        if (n < 3) throw std::invalid_argument("Tournament3: vertex count must be >= 3");
    }

    int order() const { return n_; }
    std::int64_t triple_count() const { return static_cast<std::int64_t>(tails_.size()); }

    int tail_code(std::int64_t rank) const { return tails_.at(rank); }
    void set_tail_code(std::int64_t rank, int code) {
        if (code < 0 || code > 2)
            throw std::invalid_argument("Tournament3: tail code must be 0, 1 or 2");
        tails_.at(rank) = static_cast<std::uint8_t>(code);
    }

    /// Tail vertex of the triple a < b < c.
    int tail_of(int a, int b, int c) const {
        check_triple(a, b, c);
        const std::array<int, 3> t{a, b, c};
        return t[tails_[triple_rank(a, b, c)]];
    }

    void set_tail(int a, int b, int c, int tail) {
        check_triple(a, b, c);
        const std::int64_t rank = triple_rank(a, b, c);
        if (tail == a) tails_[rank] = 0;
        else if (tail == b) tails_[rank] = 1;
        else if (tail == c) tails_[rank] = 2;
        else throw std::invalid_argument("Tournament3: tail must be a member of the triple");
    }

    bool operator==(const Tournament3&) const = default;

private:
    void check_triple(int a, int b, int c) const {
        if (!(0 <= a && a < b && b < c && c < n_))
            throw std::invalid_argument("Tournament3: invalid triple");
    }

    int n_;
    std::vector<std::uint8_t> tails_;
};

struct WitnessTriple {
    int vertex;                 // the dominated vertex
    std::array<int, 3> triple;  // a triple containing it, smallest colex rank
    int tail;                   // the triple's tail, a member of the dominating set
};

struct LowerBoundRecord {
    int size;                    // value - 1
    std::int64_t sets_examined;  // equals C(n, size): full exhaustion
};

struct DominationCertificate {
    enum class Mode { exact, greedy };
    Mode mode = Mode::exact;
    int value = 0;
    std::vector<int> witness;  // increasing; exact mode: lexicographically least optimum
    std::vector<WitnessTriple> witness_triples;
    std::optional<LowerBoundRecord> lower_bound_record;  // exact mode only
};

struct GreedyStep {
    int remaining_before;
    int pick;
    std::int64_t tail_count_induced;  // the pick's tail count inside the remaining set
    int remaining_after;
};

struct GreedyResult {
    DominationCertificate certificate;
    std::vector<GreedyStep> steps;
};

struct PairTailReport {
    bool holds = false;
    std::optional<std::array<int, 4>> counterexample;  // first 4-set in colex order
                                                       // whose four triples have four
                                                       // distinct tails
};

struct DominationCheck {
    bool dominating = false;
    std::vector<WitnessTriple> witness_triples;  // one per vertex outside X, when dominating
};

/// Number of triples whose tail is v.
std::int64_t tail_count(const Tournament3& t, int v);

/// Tail counts for every vertex in one pass.
std::vector<std::int64_t> tail_counts(const Tournament3& t);

/// Vertices covered by picking v: the union of A \ {v} over triples A with
/// tail v. Never contains v itself.
VertexSet cover_set(const Tournament3& t, int v);

/// X dominates iff every vertex outside X lies in a triple whose tail is in
/// X. The witness triple per dominated vertex is the one of smallest colex
/// rank. X must be nonempty.
DominationCheck is_dominating(const Tournament3& t, const VertexSet& x);

/// Exact domination number by iterative deepening over the equivalent set
/// cover instance. Witness is the lexicographically least optimal set; the
/// lower-bound record counts an explicit exhaustive sweep of all
/// (value-1)-sets.
DominationCertificate domination_number_exact(const Tournament3& t);

/// Greedy dominating set: repeatedly pick the vertex that is the tail of
/// the most triples inside the remaining set (ties to the smallest id),
/// remove it and everything it covers, and finish the last <= 2 vertices
/// directly.
GreedyResult greedy_dominating_set(const Tournament3& t);

/// Checks that every 4 vertices induce at least two triples with the same
/// tail. Requires n >= 4; the counterexample is the first failing 4-set in
/// colex order.
PairTailReport pair_tail_property(const Tournament3& t);

/// Uniform random tails, deterministic per (n, seed).
Tournament3 random_tournament3(int n, std::uint64_t seed);

/// Text format: first line n, then exactly C(n,3) lines "a b c t" with
/// a < b < c and t a member of the triple. Lines may come in any order;
/// duplicates and omissions are rejected. The writer emits colex order.
Tournament3 read_tournament(std::istream& in);
Tournament3 read_tournament_file(const std::string& path);
void write_tournament(std::ostream& out, const Tournament3& t);
void write_tournament_file(const std::string& path, const Tournament3& t);

}  // namespace tridom
