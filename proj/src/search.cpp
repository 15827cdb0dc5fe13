#include "tridom/search.hpp"

#include <algorithm>
#include <utility>

#include "tridom/combinatorics.hpp"
#include "tridom/rng.hpp"

namespace tridom {
namespace {

Digraph sample_gnp(int n, double p, Rng& rng) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p)) g.add_arc(u, v);
    return g;
}

// Depth-first search over the n(n-1) ordered-pair decisions in row-major
// order. Girth pruning keeps all-pairs shortest distances saturated at
// dist_cap_ = min(l-1, n); entries below the cap are exact, the cap itself
// means "no path that matters". An arc u->v is forbidden when d(v,u) sits
// below the cap, since it would close a cycle shorter than l. A second
// prune drops branches where some vertex can no longer acquire an
// in-neighbor (every S_k digraph needs indegree >= 1 everywhere); without
// it the search drowns in assignments whose failure only surfaces at the
// bottom of the tree.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const SearchParams& params, const SearchTuning& tuning)
        : n_(params.n), k_(params.k), l_(params.l), limit_(params.limit),
          prune_(tuning.prune), dist_cap_(std::min(params.l - 1, params.n)),
          out_(params.n, VertexSet(params.n)), indeg_(params.n, 0),
          pair_index_(static_cast<std::size_t>(params.n) * params.n, -1),
          dist_(static_cast<std::size_t>(params.n) * params.n, 0) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v) {
                    pair_index_[static_cast<std::size_t>(u) * n_ + v] =
                        static_cast<int>(pairs_.size());
                    pairs_.emplace_back(u, v);
                }
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) dist_at(x, y) = (x == y) ? 0 : dist_cap_;
    }

    void run(OrderRecord& record, std::vector<Digraph>& witnesses) {
        witnesses_ = &witnesses;
        dfs(0);
        record.n = n_;
        record.nodes = nodes_;
        record.leaves = leaves_;
        record.witnesses_found = found_;
        record.exhausted = !skipped_;
    }

private:
    int& dist_at(int x, int y) { return dist_[static_cast<std::size_t>(x) * n_ + y]; }
    int pair_idx(int u, int v) const {
        return pair_index_[static_cast<std::size_t>(u) * n_ + v];
    }

    // Can v still end up with an in-neighbor once every pair up to and
    // including decision i is fixed? Sound for every k: S_k forces
    // indegree >= 1 everywhere.
    bool vertex_alive(int v, int decided_through) {
        if (indeg_[v] > 0) return true;
        for (int x = 0; x < n_; ++x) {
            if (x == v || pair_idx(x, v) <= decided_through) continue;
            if (dist_at(v, x) >= dist_cap_) return true;  // arc x->v still legal
        }
        return false;
    }

    bool all_vertices_alive(int decided_through) {
        for (int v = 0; v < n_; ++v)
            if (!vertex_alive(v, decided_through)) return false;
        return true;
    }

    Digraph materialize() const {
        Digraph g(n_);
        for (int u = 0; u < n_; ++u) out_[u].for_each([&](int v) { g.add_arc(u, v); });
        return g;
    }

    void emit(Digraph g) {
        // Witnesses must re-pass the digraph module's own checks.
        if (!girth(g).is_at_least(l_) || !has_Sk(g, k_).holds)
            throw std::logic_error("find_digraphs: emitted witness failed re-verification");
        witnesses_->push_back(std::move(g));
        if (++found_ >= limit_) stop_ = true;
    }

    void leaf() {
        ++leaves_;
        for (int v = 0; v < n_; ++v)
            if (indeg_[v] == 0) return;  // necessary for every S_k
        Digraph g = materialize();
        if (!prune_ && !girth(g).is_at_least(l_)) return;
        if (k_ > 1 && !has_Sk(g, k_).holds) return;
        emit(std::move(g));
    }

    void add_arc(int u, int v) {
        out_[u].insert(v);
        ++indeg_[v];
        saved_dist_.push_back(dist_);
        for (int x = 0; x < n_; ++x) {
            const int to_u = dist_at(x, u);  // 0 when x == u
            if (to_u >= dist_cap_) continue;
            for (int y = 0; y < n_; ++y) {
                const int cand = to_u + 1 + dist_at(v, y);
                if (cand < dist_at(x, y)) dist_at(x, y) = cand;
            }
        }
    }

    void remove_arc(int u, int v) {
        out_[u].erase(v);
        --indeg_[v];
        dist_ = std::move(saved_dist_.back());
        saved_dist_.pop_back();
    }

    void dfs(std::size_t i) {
        if (i == pairs_.size()) {
            leaf();
            return;
        }
        ++nodes_;
        const auto [u, v] = pairs_[i];

        // No-arc branch first: witnesses appear sparse-first.
        if (!prune_ || vertex_alive(v, static_cast<int>(i))) {
            if (stop_) {
                skipped_ = true;
                return;
            }
            dfs(i + 1);
        }

        // Arc branch, unless it closes a cycle of length < l.
        if (prune_ && dist_at(v, u) < dist_cap_) return;
        if (stop_) {
            skipped_ = true;
            return;
        }
        add_arc(u, v);
        if (!prune_ || all_vertices_alive(static_cast<int>(i))) {
            if (stop_) skipped_ = true;
            else dfs(i + 1);
        }
        remove_arc(u, v);
    }

    const int n_, k_, l_, limit_;
    const bool prune_;
    const int dist_cap_;

    std::vector<std::pair<int, int>> pairs_;
    std::vector<VertexSet> out_;
    std::vector<int> indeg_;
    std::vector<int> pair_index_;
    std::vector<int> dist_;
    std::vector<std::vector<int>> saved_dist_;

    std::vector<Digraph>* witnesses_ = nullptr;
    std::uint64_t nodes_ = 0, leaves_ = 0;
    int found_ = 0;
    bool stop_ = false, skipped_ = false;
};

void validate_params(const SearchParams& p) {
    if (p.n < 2) throw std::invalid_argument("find_digraphs: need n >= 2");
    if (p.k < 1 || p.k >= p.n) throw std::invalid_argument("find_digraphs: need 1 <= k < n");
    if (p.l < 2) throw std::invalid_argument("find_digraphs: need l >= 2");
    if (p.limit < 1) throw std::invalid_argument("find_digraphs: need limit >= 1");
    if (p.mode == SearchMode::random) {
        if (p.trials < 0) throw std::invalid_argument("find_digraphs: need trials >= 0");
        if (p.arc_probability < 0.0 || p.arc_probability > 1.0)
            throw std::invalid_argument("find_digraphs: arc probability must be in [0,1]");
    }
}

}  // namespace

SearchReport find_digraphs(const SearchParams& params, const SearchTuning& tuning) {
    validate_params(params);
    SearchReport report;
    report.k = params.k;
    report.l = params.l;
    report.mode = params.mode;
    report.limit = params.limit;
    report.seed = params.seed;
    report.trials = params.mode == SearchMode::random ? params.trials : 0;
    report.n_lo = report.n_hi = params.n;

    OrderRecord record;
    if (params.mode == SearchMode::exhaustive) {
        ExhaustiveSearch search(params, tuning);
        search.run(record, report.witnesses);
    } else {
        Rng rng(params.seed);
        record.n = params.n;
        for (int trial = 0; trial < params.trials; ++trial) {
            ++record.nodes;
            ++record.leaves;
            Digraph g = sample_gnp(params.n, params.arc_probability, rng);
            if (!girth(g).is_at_least(params.l)) continue;
            if (!has_Sk(g, params.k).holds) continue;
            report.witnesses.push_back(std::move(g));
            if (++record.witnesses_found >= params.limit) break;
        }
        record.exhausted = false;  // sampling never covers the space
    }
    report.orders.push_back(record);
    report.exhausted = record.exhausted;
    report.nodes_explored = record.nodes;
    report.leaves = record.leaves;
    return report;
}

SearchReport find_min_order(int k, int l, int n_max, int limit_per_order) {
    if (k < 1) throw std::invalid_argument("find_min_order: need k >= 1");
    if (n_max < k + 1) throw std::invalid_argument("find_min_order: need n_max >= k+1");
    SearchReport report;
    report.k = k;
    report.l = l;
    report.mode = SearchMode::exhaustive;
    report.limit = limit_per_order;
    report.n_lo = std::max(2, k + 1);
    report.n_hi = report.n_lo;
    report.exhausted = true;

    for (int n = report.n_lo; n <= n_max; ++n) {
        SearchParams params;
        params.n = n;
        params.k = k;
        params.l = l;
        params.limit = limit_per_order;
        SearchReport sub = find_digraphs(params);
        report.n_hi = n;
        report.orders.push_back(sub.orders.front());
        report.nodes_explored += sub.nodes_explored;
        report.leaves += sub.leaves;
        report.exhausted = report.exhausted && sub.exhausted;
        if (!sub.witnesses.empty()) {
            report.min_order = n;
            for (auto& w : sub.witnesses) report.witnesses.push_back(std::move(w));
            break;
        }
    }
    return report;
}

void for_each_tournament_orientation(int n, const std::function<void(const Digraph&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_tournament_orientation: need n >= 1");
    if (n > 6)
        throw std::invalid_argument(
            "for_each_tournament_orientation: n > 6 is too large for exhaustive streaming");
    std::vector<std::pair<int, int>> pairs;  // colex order over {a<b}
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
    const std::uint64_t total = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Digraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [a, b] = pairs[i];
            if (mask & (1ULL << i)) g.add_arc(b, a);
            else g.add_arc(a, b);
        }
        fn(g);
    }
}

Digraph random_digraph(int n, double p, std::uint64_t seed, std::optional<int> min_girth,
                       int max_retries) {
    if (n < 1) throw std::invalid_argument("random_digraph: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_digraph: p must be in [0,1]");
    if (min_girth && *min_girth < 2)
        throw std::invalid_argument("random_digraph: min_girth must be >= 2");
    Rng rng(seed);
    const int attempts = min_girth ? max_retries : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Digraph g = sample_gnp(n, p, rng);
        if (!min_girth || girth(g).is_at_least(*min_girth)) return g;
    }
    throw RetriesExhaustedError("random_digraph: no sample reached girth >= " +
                                std::to_string(*min_girth) + " after " +
                                std::to_string(max_retries) + " attempts");
}

}  // namespace tridom
