#include "tridom/tournament.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tridom/rng.hpp"

namespace tridom {
namespace {

// Triples {a<b<c} in colex order; rank increments by one per call.
template <class F>
void for_each_triple(int n, F&& f) {
    std::int64_t rank = 0;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) f(rank++, a, b, c);
}

int tail_vertex(const Tournament3& t, std::int64_t rank, int a, int b, int c) {
    const std::array<int, 3> m{a, b, c};
    return m[t.tail_code(rank)];
}

std::vector<VertexSet> all_cover_sets(const Tournament3& t) {
    std::vector<VertexSet> covers(t.order(), VertexSet(t.order()));
    for_each_triple(t.order(), [&](std::int64_t rank, int a, int b, int c) {
        const int tl = tail_vertex(t, rank, a, b, c);
        for (int m : {a, b, c})
            if (m != tl) covers[tl].insert(m);
    });
    return covers;
}

}  // namespace

std::int64_t tail_count(const Tournament3& t, int v) {
    if (v < 0 || v >= t.order()) throw std::out_of_range("tail_count: vertex out of range");
    return tail_counts(t)[v];
}

std::vector<std::int64_t> tail_counts(const Tournament3& t) {
    std::vector<std::int64_t> counts(t.order(), 0);
    for_each_triple(t.order(), [&](std::int64_t rank, int a, int b, int c) {
        ++counts[tail_vertex(t, rank, a, b, c)];
    });
    return counts;
}

VertexSet cover_set(const Tournament3& t, int v) {
    if (v < 0 || v >= t.order()) throw std::out_of_range("cover_set: vertex out of range");
    VertexSet cover(t.order());
    for_each_triple(t.order(), [&](std::int64_t rank, int a, int b, int c) {
        if (tail_vertex(t, rank, a, b, c) != v) return;
        for (int m : {a, b, c})
            if (m != v) cover.insert(m);
    });
    return cover;
}

DominationCheck is_dominating(const Tournament3& t, const VertexSet& x) {
    if (x.empty()) throw std::invalid_argument("is_dominating: empty vertex set");
    const int n = t.order();
    std::vector<std::int64_t> witness_rank(n, -1);
    for_each_triple(n, [&](std::int64_t rank, int a, int b, int c) {
        const int tl = tail_vertex(t, rank, a, b, c);
        if (!x.contains(tl)) return;
        for (int m : {a, b, c})
            if (!x.contains(m) && witness_rank[m] < 0) witness_rank[m] = rank;
    });

    DominationCheck check;
    check.dominating = true;
    for (int v = 0; v < n; ++v) {
        if (x.contains(v)) continue;
        if (witness_rank[v] < 0) {
            check.dominating = false;
            check.witness_triples.clear();
            return check;
        }
        const auto triple = triple_unrank(witness_rank[v], n);
        check.witness_triples.push_back(
            {v, triple, tail_vertex(t, witness_rank[v], triple[0], triple[1], triple[2])});
    }
    return check;
}

namespace {

// Set cover view of domination: picking x covers pick_cover[x] =
// cover_set(x) + {x}; X dominates iff the union over X is everything.
struct CoverInstance {
    int n;
    VertexSet everything;
    std::vector<VertexSet> pick_cover;
    std::vector<VertexSet> coverers;  // coverers[u] = { x : u in pick_cover[x] }

    explicit CoverInstance(const Tournament3& t)
        : n(t.order()), everything(VertexSet::all(t.order())),
          pick_cover(all_cover_sets(t)), coverers(t.order(), VertexSet(t.order())) {
        for (int x = 0; x < n; ++x) {
            pick_cover[x].insert(x);
            pick_cover[x].for_each([&](int u) { coverers[u].insert(x); });
        }
    }

    std::int64_t max_residual(const VertexSet& dominated, int lo = 0) const {
        std::int64_t best = 0;
        for (int x = lo; x < n; ++x)
            best = std::max<std::int64_t>(best, (pick_cover[x] - dominated).count());
        return best;
    }
};

// Branch and bound: can `budget` picks cover everything? Branches on the
// uncovered vertex with the fewest candidate coverers.
bool cover_feasible(const CoverInstance& inst, int budget, const VertexSet& dominated) {
    if (dominated == inst.everything) return true;
    if (budget == 0) return false;
    const VertexSet uncovered = inst.everything - dominated;
    if (budget * inst.max_residual(dominated) < uncovered.count()) return false;

    int branch_vertex = -1, fewest = inst.n + 1;
    uncovered.for_each([&](int u) {
        const int cands = inst.coverers[u].count();
        if (cands < fewest) {
            fewest = cands;
            branch_vertex = u;
        }
    });
    bool found = false;
    inst.coverers[branch_vertex].for_each([&](int x) {
        if (!found && cover_feasible(inst, budget - 1, dominated | inst.pick_cover[x]))
            found = true;
    });
    return found;
}

// First cover of size exactly `size` in lexicographic order of the chosen
// set. Candidates are tried in increasing order with sound pruning only, so
// the first complete cover found is the lexicographically least one.
bool lex_least_cover(const CoverInstance& inst, int size, int last, const VertexSet& dominated,
                     std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == size) return dominated == inst.everything;
    const int budget = size - static_cast<int>(chosen.size());
    if (inst.n - 1 - last < budget) return false;

    const VertexSet uncovered = inst.everything - dominated;
    if (budget * inst.max_residual(dominated, last + 1) < uncovered.count()) return false;
    VertexSet remaining_picks(inst.n);
    for (int x = last + 1; x < inst.n; ++x) remaining_picks.insert(x);
    bool stuck = false;
    uncovered.for_each([&](int u) {
        if (!inst.coverers[u].intersects(remaining_picks)) stuck = true;
    });
    if (stuck) return false;

    for (int x = last + 1; x < inst.n; ++x) {
        chosen.push_back(x);
        if (lex_least_cover(inst, size, x, dominated | inst.pick_cover[x], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

DominationCertificate domination_number_exact(const Tournament3& t) {
    const CoverInstance inst(t);
    int value = inst.n;  // the full vertex set always dominates
    for (int s = 1; s <= inst.n; ++s) {
        if (cover_feasible(inst, s, VertexSet(inst.n))) {
            value = s;
            break;
        }
    }

    std::vector<int> witness;
    if (!lex_least_cover(inst, value, -1, VertexSet(inst.n), witness))
        throw std::logic_error("domination_number_exact: witness extraction failed");

    // Certify the lower bound by exhausting every (value-1)-set explicitly.
    LowerBoundRecord record{value - 1, 0};
    if (record.size == 0) {
        record.sets_examined = 1;  // the empty set leaves every vertex uncovered
    } else {
        std::vector<int> combo = first_colex_subset(record.size);
        do {
            ++record.sets_examined;
            VertexSet dominated(inst.n);
            for (int x : combo) dominated |= inst.pick_cover[x];
            if (dominated == inst.everything)
                throw std::logic_error("domination_number_exact: lower bound violated");
        } while (next_colex_subset(combo, inst.n));
    }

    VertexSet witness_set(inst.n);
    for (int x : witness) witness_set.insert(x);
    auto check = is_dominating(t, witness_set);
    if (!check.dominating)
        throw std::logic_error("domination_number_exact: witness does not dominate");

    DominationCertificate cert;
    cert.mode = DominationCertificate::Mode::exact;
    cert.value = value;
    cert.witness = std::move(witness);
    cert.witness_triples = std::move(check.witness_triples);
    cert.lower_bound_record = record;
    return cert;
}

GreedyResult greedy_dominating_set(const Tournament3& t) {
    const int n = t.order();
    const auto covers = all_cover_sets(t);

    GreedyResult result;
    VertexSet picked(n);
    VertexSet covered_by_picked(n);
    VertexSet remaining = VertexSet::all(n);

    while (remaining.count() >= 3) {
        // Tail counts restricted to triples inside the remaining set.
        const std::vector<int> rv = remaining.elements();
        std::vector<std::int64_t> counts(n, 0);
        for (std::size_t k = 2; k < rv.size(); ++k)
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 0; i < j; ++i) ++counts[t.tail_of(rv[i], rv[j], rv[k])];
        int pick = rv[0];
        for (int v : rv)
            if (counts[v] > counts[pick]) pick = v;  // ties keep the smaller id

        GreedyStep step;
        step.remaining_before = remaining.count();
        step.pick = pick;
        step.tail_count_induced = counts[pick];

        picked.insert(pick);
        covered_by_picked |= covers[pick];
        remaining.erase(pick);
        remaining -= covers[pick];

        step.remaining_after = remaining.count();
        result.steps.push_back(step);
    }
    // No triples fit inside 2 vertices; keep whatever is still uncovered.
    remaining.for_each([&](int u) {
        if (!covered_by_picked.contains(u)) {
            picked.insert(u);
            covered_by_picked |= covers[u];
        }
    });

    auto check = is_dominating(t, picked);
    if (!check.dominating) throw std::logic_error("greedy_dominating_set: result not dominating");

    DominationCertificate cert;
    cert.mode = DominationCertificate::Mode::greedy;
    cert.value = picked.count();
    cert.witness = picked.elements();
    cert.witness_triples = std::move(check.witness_triples);
    result.certificate = std::move(cert);
    return result;
}

PairTailReport pair_tail_property(const Tournament3& t) {
    const int n = t.order();
    if (n < 4) throw std::invalid_argument("pair_tail_property: need n >= 4");
    PairTailReport report;
    // 4-sets {a<b<c<e} in colex order.
    for (int e = 3; e < n; ++e)
        for (int c = 2; c < e; ++c)
            for (int b = 1; b < c; ++b)
                for (int a = 0; a < b; ++a) {
                    const std::array<int, 4> tails{t.tail_of(a, b, c), t.tail_of(a, b, e),
                                                   t.tail_of(a, c, e), t.tail_of(b, c, e)};
                    bool shared = false;
                    for (int i = 0; i < 4 && !shared; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (tails[i] == tails[j]) {
                                shared = true;
                                break;
                            }
                    if (!shared) {
                        report.holds = false;
                        report.counterexample = {a, b, c, e};
                        return report;
                    }
                }
    report.holds = true;
    return report;
}

Tournament3 random_tournament3(int n, std::uint64_t seed) {
    Tournament3 t(n);
    Rng rng(seed);
    for (std::int64_t rank = 0; rank < t.triple_count(); ++rank)
        t.set_tail_code(rank, static_cast<int>(rng.below(3)));
    return t;
}

Tournament3 read_tournament(std::istream& in) {
    std::string line;
    int n = -1;
    std::optional<Tournament3> t;
    std::vector<bool> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        const std::string where = "tournament line " + std::to_string(lineno);
        if (n < 0) {
            if (!(ls >> n) || n < 3)
                throw ParseError(where + ": expected a vertex count >= 3");
            std::string extra;
            if (ls >> extra) throw ParseError(where + ": trailing tokens after vertex count");
            t.emplace(n);
            seen.assign(static_cast<std::size_t>(t->triple_count()), false);
            continue;
        }
        int a, b, c, tail;
        std::string extra;
        if (!(ls >> a >> b >> c >> tail) || (ls >> extra))
            throw ParseError(where + ": expected exactly 'a b c t'");
        if (!(0 <= a && a < b && b < c && c < n))
            throw ParseError(where + ": triple must satisfy 0 <= a < b < c < n");
        const std::int64_t rank = triple_rank(a, b, c);
        if (seen[rank]) throw ParseError(where + ": duplicate triple");
        seen[rank] = true;
        try {
            t->set_tail(a, b, c, tail);
        } catch (const std::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (!t) throw ParseError("tournament: missing vertex count line");
    for (std::size_t rank = 0; rank < seen.size(); ++rank) {
        if (!seen[rank]) {
            const auto miss = triple_unrank(static_cast<std::int64_t>(rank), n);
            throw ParseError("tournament: missing triple {" + std::to_string(miss[0]) + "," +
                             std::to_string(miss[1]) + "," + std::to_string(miss[2]) + "}");
        }
    }
    return *t;
}

Tournament3 read_tournament_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tournament file: " + path);
    return read_tournament(in);
}

void write_tournament(std::ostream& out, const Tournament3& t) {
    out << t.order() << '\n';
    for_each_triple(t.order(), [&](std::int64_t rank, int a, int b, int c) {
        out << a << ' ' << b << ' ' << c << ' ' << tail_vertex(t, rank, a, b, c) << '\n';
    });
}

void write_tournament_file(const std::string& path, const Tournament3& t) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open tournament file for writing: " + path);
    write_tournament(out, t);
}

}  // namespace tridom
