#include "tridom/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "tridom/combinatorics.hpp"

namespace tridom {
namespace {

constexpr int kNoDist = std::numeric_limits<int>::max();

// BFS distances from source over the given out-sets.
std::vector<int> bfs_distances(const Digraph& d, int source) {
    std::vector<int> dist(d.order(), kNoDist);
    dist[source] = 0;
    VertexSet frontier(d.order());
    frontier.insert(source);
    int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        VertexSet next(d.order());
        frontier.for_each([&](int u) { next |= d.out(u); });
        VertexSet fresh(d.order());
        next.for_each([&](int v) {
            if (dist[v] == kNoDist) {
                dist[v] = depth;
                fresh.insert(v);
            }
        });
        frontier = fresh;
    }
    return dist;
}

// Shortest directed cycle length through `s`, or kNoDist. dist[x] + 1 for
// the closing arc x->s; BFS layers make the first hit shortest.
int shortest_cycle_through(const Digraph& d, int s) {
    const auto dist = bfs_distances(d, s);
    int best = kNoDist;
    for (int x = 0; x < d.order(); ++x)
        if (dist[x] != kNoDist && d.has_arc(x, s))
            best = std::min(best, dist[x] + 1);
    return best;
}

// BFS distances *to* target, restricted to vertices >= lo.
std::vector<int> bfs_distances_to(const Digraph& d, int target, int lo) {
    std::vector<int> dist(d.order(), kNoDist);
    dist[target] = 0;
    std::vector<int> queue{target};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int u = std::max(lo, 0); u < d.order(); ++u) {
            if (dist[u] == kNoDist && d.has_arc(u, v)) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

// Lexicographically least cycle of length g whose minimum vertex is s, as a
// vertex sequence starting at s. DFS extends with the smallest admissible
// vertex first, so the first complete cycle found is the least one.
bool lex_least_cycle_from(const Digraph& d, int s, int g, const std::vector<int>& dist_to_s,
                          std::vector<int>& path, VertexSet& visited) {
    const int t = static_cast<int>(path.size());
    const int cur = path.back();
    for (int c = d.out(cur).first(); c >= 0; c = d.out(cur).next_at_or_after(c + 1)) {
        if (c <= s || visited.contains(c)) continue;
        if (dist_to_s[c] == kNoDist || dist_to_s[c] > g - t) continue;
        path.push_back(c);
        visited.insert(c);
        if (t + 1 == g) {
            if (d.has_arc(c, s)) return true;
        } else if (lex_least_cycle_from(d, s, g, dist_to_s, path, visited)) {
            return true;
        }
        visited.erase(c);
        path.pop_back();
    }
    return false;
}

}  // namespace

GirthResult girth(const Digraph& d) {
    int g = kNoDist;
    for (int s = 0; s < d.order(); ++s)
        g = std::min(g, shortest_cycle_through(d, s));
    if (g == kNoDist) return {};

    GirthResult r;
    r.kind = GirthResult::Kind::finite;
    r.length = g;
    // The witness's first vertex is the smallest vertex lying on any
    // shortest cycle; all other cycle vertices exceed it.
    for (int s = 0; s < d.order(); ++s) {
        const auto dist_to_s = bfs_distances_to(d, s, s);
        std::vector<int> path{s};
        VertexSet visited(d.order());
        visited.insert(s);
        if (lex_least_cycle_from(d, s, g, dist_to_s, path, visited)) {
            r.cycle = std::move(path);
            return r;
        }
    }
    throw std::logic_error("girth: no witness for finite girth");  // unreachable
}

bool is_acyclic(const Digraph& d) {
    std::vector<int> indeg(d.order(), 0);
    for (int u = 0; u < d.order(); ++u)
        d.out(u).for_each([&](int v) { ++indeg[v]; });
    std::vector<int> queue;
    for (int v = 0; v < d.order(); ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int peeled = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        ++peeled;
        d.out(queue[qi]).for_each([&](int v) {
            if (--indeg[v] == 0) queue.push_back(v);
        });
    }
    return peeled == d.order();
}

InducedSubgraph induced(const Digraph& d, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced: empty vertex set");
    const std::vector<int> verts = s.elements();  // increasing, keeps the ordering
    std::vector<int> new_id(d.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    Digraph sub(static_cast<int>(verts.size()));
    for (int u : verts) {
        (d.out(u) & s).for_each([&](int v) { sub.add_arc(new_id[u], new_id[v]); });
    }
    return {std::move(sub), verts};
}

std::vector<int> max_path_starts(const Digraph& d) {
    // Topological order by Kahn peeling on out-degrees gives a reverse
    // topological order directly.
    std::vector<int> remaining_out(d.order());
    std::vector<VertexSet> in(d.order(), VertexSet(d.order()));
    for (int u = 0; u < d.order(); ++u) {
        remaining_out[u] = d.out_degree(u);
        d.out(u).for_each([&](int v) { in[v].insert(u); });
    }
    std::vector<int> order;  // sinks first
    for (int v = 0; v < d.order(); ++v)
        if (remaining_out[v] == 0) order.push_back(v);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        in[order[qi]].for_each([&](int u) {
            if (--remaining_out[u] == 0) order.push_back(u);
        });
    }
    if (static_cast<int>(order.size()) != d.order())
        throw CyclicInputError("max_path_starts: input digraph has a directed cycle");

    std::vector<int> len(d.order(), 0);  // longest path (arc count) starting here
    for (int v : order) {
        int best = -1;
        d.out(v).for_each([&](int u) { best = std::max(best, len[u]); });
        len[v] = best + 1;
    }
    const int global = *std::max_element(len.begin(), len.end());
    std::vector<int> starts;
    for (int v = 0; v < d.order(); ++v)
        if (len[v] == global) starts.push_back(v);
    return starts;
}

namespace {

// Scans colex ranks [first_rank, last_rank) of k-subsets. Returns the rank
// of the first failing subset, or -1; fills dominators when requested.
std::int64_t scan_sk_range(const Digraph& d, int k, std::int64_t first_rank,
                           std::int64_t last_rank, std::vector<int>* dominators) {
    if (first_rank >= last_rank) return -1;
    std::vector<int> combo = subset_colex_unrank(first_rank, k, d.order());
    for (std::int64_t r = first_rank; r < last_rank; ++r) {
        VertexSet x(d.order());
        for (int v : combo) x.insert(v);
        int dominator = -1;
        for (int v = 0; v < d.order(); ++v) {
            if (x.contains(v)) continue;
            if (d.out(v).contains_all(x)) {
                dominator = v;
                break;
            }
        }
        if (dominator < 0) return r;
        if (dominators) (*dominators)[r] = dominator;
        next_colex_subset(combo, d.order());
    }
    return -1;
}

}  // namespace

SkReport has_Sk(const Digraph& d, int k, bool record_map, int threads) {
    if (k < 1) throw std::invalid_argument("has_Sk: k must be positive");
    if (k >= d.order()) throw std::invalid_argument("has_Sk: k must be smaller than the order");
    const std::int64_t total = binomial(d.order(), k);

    SkReport report;
    report.k = k;
    std::vector<int> dominators;
    if (record_map) dominators.assign(total, -1);

    std::int64_t first_fail = -1;
    const int workers =
        static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, total)));
    if (workers == 1) {
        first_fail = scan_sk_range(d, k, 0, total, record_map ? &dominators : nullptr);
    } else {
        // Deterministic regardless of worker count: reduce by minimum
        // failing colex rank; dominator writes are disjoint by rank.
        std::vector<std::int64_t> fails(workers, -1);
        std::vector<std::thread> pool;
        const std::int64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = w * chunk;
            const std::int64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                fails[w] = scan_sk_range(d, k, lo, hi, record_map ? &dominators : nullptr);
            });
        }
        for (auto& t : pool) t.join();
        for (std::int64_t f : fails)
            if (f >= 0 && (first_fail < 0 || f < first_fail)) first_fail = f;
    }

    if (first_fail >= 0) {
        report.holds = false;
        report.counterexample = subset_colex_unrank(first_fail, k, d.order());
    } else {
        report.holds = true;
        if (record_map) report.dominators_by_rank = std::move(dominators);
    }
    return report;
}

Digraph power(const Digraph& d, int b) {
    if (b < 1) throw std::invalid_argument("power: exponent must be positive");
    Digraph result(d.order());
    for (int x = 0; x < d.order(); ++x) {
        VertexSet reach(d.order());
        VertexSet frontier(d.order());
        frontier.insert(x);
        for (int step = 0; step < b && !frontier.empty(); ++step) {
            VertexSet next(d.order());
            frontier.for_each([&](int u) { next |= d.out(u); });
            frontier = next - reach;
            frontier.erase(x);  // walks through x do not shorten paths from x
            reach |= next;
        }
        reach.erase(x);
        reach.for_each([&](int y) { result.add_arc(x, y); });
    }
    return result;
}

int ceil_log2_log2(int n) {
    if (n < 2) throw std::invalid_argument("ceil_log2_log2: n must be >= 2");
    int t = 0;
    // 2^(2^t) >= n  <=>  t >= log2 log2 n
    unsigned long long tower = 2;  // 2^(2^0)
    while (tower < static_cast<unsigned long long>(n)) {
        ++t;
        tower = tower * tower;
    }
    return t;
}

GirthBoundAudit girth_bound_audit(const Digraph& d) {
    if (d.order() < 3) throw std::invalid_argument("girth_bound_audit: need n >= 3");
    GirthBoundAudit audit;
    audit.n = d.order();
    audit.bound = 2 * ceil_log2_log2(d.order());
    audit.s2 = has_Sk(d, 2).holds;
    audit.girth = girth(d);
    if (!audit.s2 || audit.girth.kind == GirthResult::Kind::infinite) {
        audit.verdict = GirthBoundAudit::Verdict::not_applicable;
    } else {
        audit.verdict = audit.girth.length <= audit.bound ? GirthBoundAudit::Verdict::pass
                                                          : GirthBoundAudit::Verdict::fail;
    }
    return audit;
}

Digraph read_digraph(std::istream& in) {
    std::string line;
    int n = -1;
    std::optional<Digraph> d;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError("digraph line " + std::to_string(lineno) +
                                 ": expected a positive vertex count");
            std::string extra;
            if (ls >> extra)
                throw ParseError("digraph line " + std::to_string(lineno) +
                                 ": trailing tokens after vertex count");
            d.emplace(n);
            continue;
        }
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("digraph line " + std::to_string(lineno) +
                             ": expected exactly 'u v'");
        try {
            d->add_arc(u, v);
        } catch (const std::exception& e) {
            throw ParseError("digraph line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!d) throw ParseError("digraph: missing vertex count line");
    return *d;
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open digraph file: " + path);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.order() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

void write_digraph_file(const std::string& path, const Digraph& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open digraph file for writing: " + path);
    write_digraph(out, d);
}

}  // namespace tridom
