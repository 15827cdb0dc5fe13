#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridom/errors.hpp"
#include "tridom/vertex_set.hpp"

namespace tridom {

/// Simple loop-free directed graph on vertices 0..n-1 with dense
/// out-neighbor sets. Vertex ids double as the fixed ordering used by the
/// tournament construction (smaller id = earlier). Immutable by convention
/// once built; all operations below are pure.
class Digraph {
public:
    explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), VertexSet(n)) {
        if (n < 1) throw std::invalid_argument("Digraph: vertex count must be >= 1");
    }

    int order() const { return n_; }

    void add_arc(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("Digraph::add_arc: vertex out of range");
        if (u == v) throw std::invalid_argument("Digraph::add_arc: self-loop");
        if (out_[u].contains(v)) throw std::invalid_argument("Digraph::add_arc: duplicate arc");
        out_[u].insert(v);
        ++arc_count_;
    }

    bool has_arc(int u, int v) const { return out_[u].contains(v); }
    const VertexSet& out(int v) const { return out_[v]; }
    int out_degree(int v) const { return out_[v].count(); }
    int arc_count() const { return arc_count_; }

    VertexSet in_neighbors(int v) const {
        VertexSet s(n_);
        for (int u = 0; u < n_; ++u)
            if (u != v && out_[u].contains(v)) s.insert(u);
        return s;
    }

    /// Arcs in row-major order, for serialization and comparisons.
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        a.reserve(arc_count_);
        for (int u = 0; u < n_; ++u) out_[u].for_each([&](int v) { a.emplace_back(u, v); });
        return a;
    }

    bool operator==(const Digraph&) const = default;

private:
    int n_;
    std::vector<VertexSet> out_;
    int arc_count_ = 0;
};

struct GirthResult {
    enum class Kind { finite, infinite };
    Kind kind = Kind::infinite;
    int length = 0;              // valid when finite
    std::vector<int> cycle;      // witness, starts at its smallest vertex

    /// Evaluates "girth at least l": infinite counts as at least anything.
    bool is_at_least(int l) const { return kind == Kind::infinite || length >= l; }
};

struct SkReport {
    int k = 0;
    bool holds = false;
    std::optional<std::vector<int>> counterexample;        // first failing k-set, colex
    std::optional<std::vector<int>> dominators_by_rank;    // when recorded and holds
};

struct GirthBoundAudit {
    enum class Verdict { pass, fail, not_applicable };
    bool s2 = false;
    GirthResult girth;
    int n = 0;
    int bound = 0;   // 2 * ceil(log2 log2 n)
    Verdict verdict = Verdict::not_applicable;
};

/// Result of taking the sub-digraph induced on a vertex set: vertices are
/// relabeled 0..|S|-1 by increasing original id (order-preserving), and
/// vertex_map[new] = original.
struct InducedSubgraph {
    Digraph graph;
    std::vector<int> vertex_map;
};

/// Minimum directed-cycle length with a deterministic witness: among
/// shortest cycles, the vertex sequence that is lexicographically least when
/// started from its smallest vertex. Infinite iff the digraph is acyclic.
GirthResult girth(const Digraph& d);

/// True iff the digraph has no directed cycle (Kahn peeling; an
/// implementation path independent of girth()).
bool is_acyclic(const Digraph& d);

InducedSubgraph induced(const Digraph& d, const VertexSet& s);

/// All vertices from which a directed path of globally maximum length
/// starts, in increasing order. A single vertex counts as a path of length
/// 0, so an empty graph returns every vertex. Throws CyclicInputError on
/// cyclic input.
std::vector<int> max_path_starts(const Digraph& d);

/// Property S_k: every k-set X of vertices has a vertex v outside X with
/// arcs from v to all of X. Scans k-sets in colex order; the counterexample
/// is the first failing set, regardless of thread count. When record_map is
/// set and the property holds, dominators_by_rank[r] is the smallest
/// dominator of the k-set with colex rank r.
SkReport has_Sk(const Digraph& d, int k, bool record_map = false, int threads = 1);

/// b-th power: arc x->y iff x != y and some directed path of length 1..b
/// joins x to y.
Digraph power(const Digraph& d, int b);

/// Smallest integer t >= 0 with 2^(2^t) >= n, i.e. ceil(log2 log2 n),
/// computed without floating point. Requires n >= 2.
int ceil_log2_log2(int n);

/// Checks the S_2 girth bound: if the digraph has S_2 and a finite girth,
/// the girth must be at most 2 * ceil(log2 log2 n). Not applicable when S_2
/// fails or the digraph is acyclic. Requires n >= 3.
GirthBoundAudit girth_bound_audit(const Digraph& d);

/// Text format: first line n, then one "u v" arc per line (0-based).
/// Blank lines and lines starting with '#' are ignored. Duplicate arcs and
/// self-loops are rejected.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
void write_digraph_file(const std::string& path, const Digraph& d);

}  // namespace tridom
